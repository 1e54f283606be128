"""The two fixed non-monotonicity instances must verify independently."""

import json

from orthokernel.counterexamples import emit_counterexamples
from orthokernel.flats import AffineSubspace, is_subflat, meet
from orthokernel.linalg import QuadraticSpace
from orthokernel.ortho import perp_g


def unpack(instance):
    space = QuadraticSpace.euclidean(instance["dim"])
    return {
        name: AffineSubspace.from_wire(space, wire)
        for name, wire in instance["flats"].items()
    }


def test_emits_both_directions():
    labels = [inst["label"] for inst in emit_counterexamples()]
    assert labels == [
        "grow-partner-breaks-perp",
        "shrink-partner-breaks-perp",
    ]


def test_payload_is_json_ready():
    payload = emit_counterexamples()
    assert json.loads(json.dumps(payload)) == payload
    for inst in payload:
        assert inst["dim"] == 3
        assert inst["form"] == "identity"
        assert set(inst["flats"]) == {"A", "B", "C"}


def test_grow_instance_reverifies():
    grow = emit_counterexamples()[0]
    flats = unpack(grow)
    a, b, c = flats["A"], flats["B"], flats["C"]
    assert (a.dim, b.dim, c.dim) == (1, 1, 2)
    assert perp_g(a, b)
    assert is_subflat(b, c) and c.dim == b.dim + 1
    assert not perp_g(a, c)
    assert grow["checks"]["perp_g(A,C)"] is False


def test_shrink_instance_reverifies():
    shrink = emit_counterexamples()[1]
    flats = unpack(shrink)
    a, b, c = flats["A"], flats["B"], flats["C"]
    assert (a.dim, b.dim, c.dim) == (2, 2, 1)
    assert perp_g(a, b)
    assert is_subflat(c, b) and c.dim == b.dim - 1
    assert meet(a, c) is not None
    assert not perp_g(a, c)
    assert shrink["checks"]["perp_g(A,C)"] is False


def test_advertised_checks_match_predicates():
    for inst in emit_counterexamples():
        for name, value in inst["checks"].items():
            expected = name != "perp_g(A,C)"
            assert value is expected, (inst["label"], name)
