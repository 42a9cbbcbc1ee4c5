"""Exact arithmetic in Q(sqrt2, sqrt3), proportion theory, triangle
dissections of squares and equilateral faces, and the face-conserving
transformation algebra of the four classical elements."""

from .elements import (
    AIR,
    EARTH,
    ELEMENTS,
    FIRE,
    WATER,
    Element,
    Particle,
    Reaction,
    basic_triangle_budget,
    cornford_family_audit,
    element,
    enumerate_decompositions,
    face_budget,
    particle,
    relative_size_audit,
    validate_reaction,
)
from .enclosure import (
    DEFAULT_WIDTH,
    Enclosure,
    cube_root_enclosure,
    enclose_value,
    refine,
    sqrt_enclosure,
)
from .field import (
    ONE,
    R2,
    R3,
    R6,
    ZERO,
    FieldElement,
    rational_cube_root,
    sqrt_in_field,
)
from .proportion import (
    DEFAULT_TOLERANCE,
    CubeDuplication,
    MeanChain,
    MeanTriangle,
    chain_valid,
    check_single_mean,
    check_two_means,
    construct_mean,
    duplicate_cube,
    invert_chain,
    mean_triangle,
    square_duplication_mean,
    two_mean_chain,
)
from .simulate import (
    ConservationReport,
    InsufficientQuantityError,
    RuleSet,
    State,
    Trace,
    applicable,
    conservation_report,
    run,
    step,
)
from .svg import dissection_svg
from .tiling import (
    BasicTriangle,
    Dissection,
    Kind,
    Mode,
    PlacedTriangle,
    Point,
    ScaledComposition,
    bounded_family,
    classify_triangle,
    cornford_scale,
    cornford_sequence,
    economical_equilateral,
    economical_square,
    orient,
    polygon_area,
    pt,
    revisited_equilateral,
    revisited_scale,
    revisited_square,
    split_right,
    squared_distance,
    symmetry_order,
    timaeus_equilateral,
    timaeus_square,
    validate,
)

__version__ = "0.1.0"
