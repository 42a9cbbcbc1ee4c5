"""Seeded dynamics: stepping, determinism, conservation, serialization."""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

import pytest

from stoicheia.elements import Reaction, particle
from stoicheia.simulate import (
    InsufficientQuantityError,
    RuleSet,
    State,
    Trace,
    applicable,
    conservation_report,
    run,
    step,
)

WATER_SPLIT = "1 water -> 1 fire + 2 air"
FIRE_MERGE = "2 fire -> 1 air"
AIR_SPLIT = "1 air -> 2 fire"

RULES = RuleSet.parse([WATER_SPLIT, FIRE_MERGE, AIR_SPLIT])


def test_step_water_split():
    s = State.from_json({"water": 1})
    out = step(s, Reaction.parse(WATER_SPLIT))
    assert out == State.from_json({"fire": 1, "air": 2})


def test_step_two_fire_to_air():
    s = State.from_json({"fire": 2})
    out = step(s, Reaction.parse(FIRE_MERGE))
    assert out == State.from_json({"air": 1})


def test_step_insufficient_quantity():
    s = State.from_json({"air": 2})
    with pytest.raises(InsufficientQuantityError):
        step(s, Reaction.parse(FIRE_MERGE))
    # state unchanged (immutable)
    assert s == State.from_json({"air": 2})


def test_step_rejects_invalid_reaction():
    s = State.from_json({"earth": 1})
    with pytest.raises(ValueError):
        step(s, Reaction.parse("1 earth -> 6 fire"))


def test_ruleset_rejects_invalid_rules():
    with pytest.raises(ValueError):
        RuleSet.parse(["1 earth -> 6 fire"])


def test_zero_steps_identity():
    s = State.from_json({"water": 3})
    trace = run(s, RULES, 0, 7)
    assert trace.final == s
    assert trace.steps == ()
    assert not trace.stopped_early


def test_earth_is_inert_early_stop():
    s = State.from_json({"earth": 5})
    trace = run(s, RULES, 10, 1)
    assert trace.stopped_early
    assert trace.final == s
    assert len(trace.steps) == 0


def test_deterministic_replay():
    s = State.from_json({"water": 1})
    a = run(s, RULES, 10, 42)
    b = run(s, RULES, 10, 42)
    assert a.to_jsonl() == b.to_jsonl()
    assert a.final == b.final


def test_different_seeds_may_differ():
    s = State.from_json({"water": 5})
    outcomes = {run(s, RULES, 20, seed).to_jsonl() for seed in range(8)}
    assert len(outcomes) > 1


def test_scalene_budget_constant_along_trace():
    s = State.from_json({"water": 1})
    trace = run(s, RULES, 10, 42)
    assert len(trace.steps) == 10
    assert all(rec.scalene == 120 for rec in trace.steps)
    report = conservation_report(trace)
    assert report.ok
    assert report.scalene == 120


def test_thousand_step_run_from_fifty_water():
    s = State.from_json({"water": 50})
    trace = run(s, RULES, 1000, 9)
    assert len(trace.steps) == 1000
    report = conservation_report(trace)
    assert report.ok
    assert report.scalene == 6000
    assert report.earth == 0


def test_corrupted_trace_flags_drift_at_first_bad_step():
    s = State.from_json({"water": 1})
    trace = run(s, RULES, 10, 42)
    bad_steps = list(trace.steps)
    bad_steps[4] = replace(bad_steps[4], scalene=Fraction(119))
    bad_steps[7] = replace(bad_steps[7], scalene=Fraction(118))
    corrupted = Trace(
        seed=trace.seed,
        initial=trace.initial,
        steps=tuple(bad_steps),
        final=trace.final,
        stopped_early=trace.stopped_early,
    )
    report = conservation_report(corrupted)
    assert not report.ok
    assert report.drifts[0].step == 4
    assert report.drifts[0].quantity == "scalene"
    assert report.drifts[0].recorded == 119


def test_reachability_of_paper_examples():
    # one step: air -> 2 fire
    s = State.from_json({"air": 1})
    rule = Reaction.parse(AIR_SPLIT)
    assert applicable(s, rule)
    after = step(s, rule)
    assert after == State.from_json({"fire": 2})
    # and back in one more step
    back = step(after, Reaction.parse(FIRE_MERGE))
    assert back == State.from_json({"air": 1})


def test_applicable_respects_size_classes():
    s = State([(particle("air", "4/3"), 1)])
    assert not applicable(s, Reaction.parse(AIR_SPLIT))
    assert applicable(s, Reaction.parse("1 air@4/3 -> 2 fire@4/3"))


def test_state_prunes_zeros_and_rejects_negatives():
    s = State([(particle("air"), 0), (particle("fire"), 2)])
    assert len(s) == 1
    with pytest.raises(ValueError):
        State([(particle("air"), -1)])


def test_state_json_roundtrip():
    s = State([(particle("air", "4/3"), Fraction(5, 2)), (particle("earth"), 1)])
    assert State.from_json(s.to_json()) == s


def test_state_shorthand_json():
    assert State.from_json({"water": "50"}) == State([(particle("water"), 50)])


def test_trace_jsonl_shape():
    s = State.from_json({"water": 1})
    trace = run(s, RULES, 3, 5)
    lines = trace.to_jsonl().strip().split("\n")
    assert len(lines) == 5  # header + 3 steps + final
    assert '"type": "header"' in lines[0]
    assert '"type": "final"' in lines[-1]


def test_csv_summary():
    s = State.from_json({"water": 1})
    trace = run(s, RULES, 2, 5)
    lines = trace.csv_summary().strip().split("\n")
    assert lines[0] == "step,rule,scalene,isosceles,earth"
    assert len(lines) == 3


def test_negative_steps_rejected():
    with pytest.raises(ValueError):
        run(State.from_json({"water": 1}), RULES, -1, 0)
