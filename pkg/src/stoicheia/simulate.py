"""Seeded multiset dynamics over particles with per-step conservation ledgers.

A run repeatedly applies validated reactions to a census of particles.
Rule selection is uniform over the currently applicable rules, drawn from
``random.Random(seed).randrange``, which is documented and stable across
platforms, so a trace is fully determined by (seed, rules, initial state,
steps).  Quantities stay exact rationals end to end; the half-equilateral
(scalene) budget and the earth census are invariant along every trace.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .elements import (
    EARTH,
    Particle,
    QtyLike,
    Reaction,
    TRIANGLES_PER_EQUILATERAL_FACE,
    TRIANGLES_PER_SQUARE_FACE,
    particle,
    validate_reaction,
)

__all__ = [
    "InsufficientQuantityError",
    "State",
    "RuleSet",
    "StepRecord",
    "Trace",
    "step",
    "applicable",
    "run",
    "Drift",
    "ConservationReport",
    "conservation_report",
]


class InsufficientQuantityError(ValueError):
    """A reaction asked for more of a particle than the state holds."""


def _census_key(p: Particle) -> tuple:
    return (p.element.name, p.size_class.coordinates)


class State:
    """Immutable census mapping particles to positive rational quantities."""

    __slots__ = ("_census",)

    def __init__(
        self,
        census: Union[Mapping[Particle, QtyLike], Iterable[tuple[Particle, QtyLike]]] = (),
    ) -> None:
        items = census.items() if isinstance(census, Mapping) else census
        cleaned: dict[Particle, Fraction] = {}
        for p, qty in items:
            q = Fraction(qty)
            if q < 0:
                raise ValueError("census quantities must be nonnegative")
            if q:
                cleaned[p] = cleaned.get(p, Fraction(0)) + q
        self._census = cleaned

    def quantity(self, p: Particle) -> Fraction:
        return self._census.get(p, Fraction(0))

    def items(self) -> list[tuple[Particle, Fraction]]:
        return sorted(self._census.items(), key=lambda kv: _census_key(kv[0]))

    def __len__(self) -> int:
        return len(self._census)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, State):
            return NotImplemented
        return self._census == other._census

    def __repr__(self) -> str:
        inner = ", ".join(f"{p}: {q}" for p, q in self.items())
        return f"State({{{inner}}})"

    def scalene_budget(self) -> Fraction:
        """Half-equilateral triangles behind all equilateral-faced particles."""
        return sum(
            (
                qty * p.element.face_count * TRIANGLES_PER_EQUILATERAL_FACE
                for p, qty in self._census.items()
                if p.element.face_shape == "equilateral"
            ),
            Fraction(0),
        )

    def isosceles_budget(self) -> Fraction:
        """Isosceles right triangles behind all earth particles."""
        return sum(
            (
                qty * p.element.face_count * TRIANGLES_PER_SQUARE_FACE
                for p, qty in self._census.items()
                if p.element is EARTH
            ),
            Fraction(0),
        )

    def earth_quantity(self) -> Fraction:
        return sum(
            (qty for p, qty in self._census.items() if p.element is EARTH), Fraction(0)
        )

    def to_json(self) -> list[dict]:
        return [
            {"element": p.element.name, "size_class": str(p.size_class), "qty": str(q)}
            for p, q in self.items()
        ]

    @classmethod
    def from_json(cls, data: Union[list, dict]) -> State:
        """Accepts the list form or the shorthand {"water": 50} mapping."""
        entries: list[tuple[Particle, Fraction]] = []
        if isinstance(data, dict):
            for name, qty in data.items():
                entries.append((particle(name), Fraction(str(qty))))
        else:
            for item in data:
                size = item.get("size_class", "1")
                entries.append(
                    (particle(item["element"], size), Fraction(str(item["qty"])))
                )
        return cls(entries)


@dataclass(frozen=True)
class RuleSet:
    """Reactions usable by the simulator; each must validate on construction."""

    rules: tuple[Reaction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", tuple(self.rules))
        if not self.rules:
            raise ValueError("a rule set needs at least one reaction")
        for i, rule in enumerate(self.rules):
            check = validate_reaction(rule)
            if not check.ok:
                reasons = "; ".join(v.message for v in check.violations)
                raise ValueError(f"rule {i} is invalid: {reasons}")

    @classmethod
    def parse(cls, texts: Sequence[str]) -> RuleSet:
        return cls(tuple(Reaction.parse(t) for t in texts))

    @classmethod
    def from_json(cls, data: list) -> RuleSet:
        rules = []
        for item in data:
            if isinstance(item, str):
                rules.append(Reaction.parse(item))
            else:
                rules.append(Reaction.from_json(item))
        return cls(tuple(rules))


def applicable(state: State, reaction: Reaction) -> bool:
    return all(state.quantity(p) >= qty for p, qty in reaction.inputs)


def step(state: State, reaction: Reaction) -> State:
    """Apply one validated reaction; raises (state unchanged) when inputs
    are missing."""
    check = validate_reaction(reaction)
    if not check.ok:
        reasons = "; ".join(v.message for v in check.violations)
        raise ValueError(f"invalid reaction: {reasons}")
    census = dict(state._census)
    for p, qty in reaction.inputs:
        have = census.get(p, Fraction(0))
        if have < qty:
            raise InsufficientQuantityError(
                f"need {qty} of {p}, state holds {have}"
            )
    for p, qty in reaction.inputs:
        census[p] = census[p] - qty
    for p, qty in reaction.outputs:
        census[p] = census.get(p, Fraction(0)) + qty
    return State(census)


@dataclass(frozen=True)
class StepRecord:
    index: int
    rule: int
    scalene: Fraction
    isosceles: Fraction
    earth: Fraction


@dataclass(frozen=True)
class Trace:
    """A replayable record of one run: same seed, rules and initial state
    always reproduce it byte for byte."""

    seed: int
    initial: State
    steps: tuple[StepRecord, ...]
    final: State
    stopped_early: bool

    def to_jsonl(self) -> str:
        lines = [
            json.dumps(
                {"type": "header", "seed": self.seed, "initial": self.initial.to_json()},
                sort_keys=True,
            )
        ]
        for rec in self.steps:
            lines.append(
                json.dumps(
                    {
                        "type": "step",
                        "index": rec.index,
                        "rule": rec.rule,
                        "scalene": str(rec.scalene),
                        "isosceles": str(rec.isosceles),
                        "earth": str(rec.earth),
                    },
                    sort_keys=True,
                )
            )
        lines.append(
            json.dumps(
                {
                    "type": "final",
                    "census": self.final.to_json(),
                    "stopped_early": self.stopped_early,
                },
                sort_keys=True,
            )
        )
        return "\n".join(lines) + "\n"

    def csv_summary(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["step", "rule", "scalene", "isosceles", "earth"])
        for rec in self.steps:
            writer.writerow([rec.index, rec.rule, rec.scalene, rec.isosceles, rec.earth])
        return buf.getvalue()


def run(initial: State, rules: RuleSet, steps: int, seed: int) -> Trace:
    """Run the dynamics for up to ``steps`` applications.

    Each step selects uniformly among the rules applicable to the current
    state; the run stops early (recorded, not an error) when none applies.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    rng = random.Random(seed)
    state = initial
    records: list[StepRecord] = []
    stopped = False
    for index in range(steps):
        ids = [i for i, rule in enumerate(rules.rules) if applicable(state, rule)]
        if not ids:
            stopped = True
            break
        chosen = ids[rng.randrange(len(ids))]
        state = step(state, rules.rules[chosen])
        records.append(
            StepRecord(
                index=index,
                rule=chosen,
                scalene=state.scalene_budget(),
                isosceles=state.isosceles_budget(),
                earth=state.earth_quantity(),
            )
        )
    return Trace(
        seed=seed,
        initial=initial,
        steps=tuple(records),
        final=state,
        stopped_early=stopped,
    )


@dataclass(frozen=True)
class Drift:
    step: int
    quantity: str
    expected: Fraction
    recorded: Fraction


@dataclass(frozen=True)
class ConservationReport:
    ok: bool
    scalene: Fraction
    isosceles: Fraction
    earth: Fraction
    steps: int
    drifts: tuple[Drift, ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "steps": self.steps,
            "scalene_budget": str(self.scalene),
            "isosceles_budget": str(self.isosceles),
            "earth_census": str(self.earth),
            "drifts": [
                {
                    "step": d.step,
                    "quantity": d.quantity,
                    "expected": str(d.expected),
                    "recorded": str(d.recorded),
                }
                for d in self.drifts
            ],
        }


def conservation_report(trace: Trace) -> ConservationReport:
    """Compare every step's recorded budgets against the initial state's;
    any drift is flagged at the first step it appears."""
    expected = (
        trace.initial.scalene_budget(),
        trace.initial.isosceles_budget(),
        trace.initial.earth_quantity(),
    )
    names = ("scalene", "isosceles", "earth")
    drifts: list[Drift] = []
    for rec in trace.steps:
        recorded = (rec.scalene, rec.isosceles, rec.earth)
        for name, want, got in zip(names, expected, recorded):
            if want != got:
                drifts.append(Drift(rec.index, name, want, got))
    final = (
        trace.final.scalene_budget(),
        trace.final.isosceles_budget(),
        trace.final.earth_quantity(),
    )
    for name, want, got in zip(names, expected, final):
        if want != got:
            drifts.append(Drift(len(trace.steps), name, want, got))
    return ConservationReport(
        ok=not drifts,
        scalene=expected[0],
        isosceles=expected[1],
        earth=expected[2],
        steps=len(trace.steps),
        drifts=tuple(drifts),
    )
