"""Fixed Q^3 configurations showing perp_g is not monotone under inclusion.

Enlarging or shrinking one side of an orthogonal pair can break the
relation, so no unconditional transitivity-along-inclusion law holds; the
two instances below pin down both directions.  Every advertised predicate
value is re-evaluated on emission and a mismatch raises InternalError,
since these values are load-bearing for everything built on perp_g.
"""

from __future__ import annotations

from .errors import InternalError
from .flats import AffineSubspace, is_subflat, meet
from .linalg import QQ, QuadraticSpace, rref_basis
from .ortho import perp_g


def _flat(space: QuadraticSpace, rows: list[list[int]]) -> AffineSubspace:
    origin = (QQ(0),) * space.dim
    basis = [[QQ(x) for x in row] for row in rows]
    return AffineSubspace.make(space, origin, rref_basis(basis, space.dim))


def _require(label: str, name: str, got: bool, want: bool) -> bool:
    if got != want:
        raise InternalError(f"{label}: check {name} evaluated to {got}")
    return got


def emit_counterexamples() -> list[dict]:
    """Build, verify, and serialize both instances."""
    space = QuadraticSpace.euclidean(3)
    instances = []

    # growing the partner: A perp_g B but not A perp_g C, though B sits
    # inside C with one extra dimension
    a1 = _flat(space, [[0, 1, 0]])
    b1 = _flat(space, [[1, 0, 0]])
    c1 = _flat(space, [[1, 0, 0], [0, 1, 1]])
    checks1 = {
        "perp_g(A,B)": _require("grow", "perp_g(A,B)", perp_g(a1, b1), True),
        "B strictly inside C": _require(
            "grow",
            "B strictly inside C",
            is_subflat(b1, c1) and c1.dim == b1.dim + 1,
            True,
        ),
        "perp_g(A,C)": _require("grow", "perp_g(A,C)", perp_g(a1, c1), False),
    }
    instances.append(
        {
            "label": "grow-partner-breaks-perp",
            "dim": 3,
            "form": "identity",
            "flats": {"A": a1.to_wire(), "B": b1.to_wire(), "C": c1.to_wire()},
            "checks": checks1,
        }
    )

    # shrinking the partner: A perp_g B but not A perp_g C, though C sits
    # inside B one dimension down and still meets A
    a2 = _flat(space, [[1, 0, 0], [0, 1, 0]])
    b2 = _flat(space, [[1, 0, 0], [0, 0, 1]])
    c2 = _flat(space, [[1, 0, 1]])
    checks2 = {
        "perp_g(A,B)": _require("shrink", "perp_g(A,B)", perp_g(a2, b2), True),
        "C strictly inside B": _require(
            "shrink",
            "C strictly inside B",
            is_subflat(c2, b2) and c2.dim == b2.dim - 1,
            True,
        ),
        "A meets C": _require("shrink", "A meets C", meet(a2, c2) is not None, True),
        "perp_g(A,C)": _require("shrink", "perp_g(A,C)", perp_g(a2, c2), False),
    }
    instances.append(
        {
            "label": "shrink-partner-breaks-perp",
            "dim": 3,
            "form": "identity",
            "flats": {"A": a2.to_wire(), "B": b2.to_wire(), "C": c2.to_wire()},
            "checks": checks2,
        }
    )

    for inst in instances:
        for name, wire in inst["flats"].items():
            if AffineSubspace.from_wire(space, wire).to_wire() != wire:
                raise InternalError(f"{inst['label']}: {name} does not round-trip")
    return instances
