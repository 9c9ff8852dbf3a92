import pytest

from braidrep.quandles import dihedral_quandle
from braidrep.switches import Biquandle
from braidrep.symbolic import (
    apply_s,
    apply_v,
    check_s2b,
    check_s3b_v3b,
    generic_state,
    symbolic_multiswitch_check,
)


def test_s2b_symbolic_check_passes():
    reports = check_s2b()
    assert reports["ybe"].passed
    assert reports["inverse"].passed


def test_s2b_composite_matches_displayed_value():
    # The two routes agree slot by slot, not merely as a pass flag.
    start = generic_state(with_q=False)
    lhs = apply_s(apply_s(apply_s(start, 0), 1), 0)
    rhs = apply_s(apply_s(apply_s(start, 1), 0), 1)
    assert lhs == rhs
    assert lhs.xs == (start.xs[2], start.xs[1], start.xs[0])
    # Third module slot collapses to the original first basis vector.
    assert lhs.mods[2] == start.mods[0]


def test_s3b_v3b_symbolic_check_passes():
    reports = check_s3b_v3b()
    for name in ("v_involutive", "ybe_s", "ybe_v", "matched"):
        assert reports[name].passed, name


def test_v_is_involutive_on_generic_state():
    start = generic_state(with_q=True)
    assert apply_v(apply_v(start, 1), 1) == start


def test_biquandle2_check_on_dihedral_quandle():
    bq = Biquandle.from_quandle(dihedral_quandle(3))
    reports = symbolic_multiswitch_check("biquandle2", biquandle=bq, trivial_sub=[0])
    for name in ("needeq", "v_involutive", "ybe_s", "ybe_v", "matched"):
        assert reports[name].passed, name


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        symbolic_multiswitch_check("s9b")


def test_dispatcher_names():
    assert symbolic_multiswitch_check("s2b")["ybe"].passed
    assert symbolic_multiswitch_check("s3b_v3b")["matched"].passed
