"""Bridge between the plane and the half line, one charge at a time."""

from fractions import Fraction

import pytest

from kreinosc import (
    ChargeAbsent,
    DomainError,
    EpsScalar,
    State1D,
    State2D,
    apply_1d,
    apply_2d,
    build_op_1d,
    build_op_2d,
    omega,
    psi0,
    radial_hamiltonian,
    radial_reduce,
)
from kreinosc.radial import RadialProfile, angular_decompose, bridge_audit

THREE_HALVES = Fraction(3, 2)


def test_radial_hamiltonian_at_the_bridge_charges():
    # both signs of the bridge charge land on the same line operator
    line = build_op_1d("H1")
    assert radial_hamiltonian(THREE_HALVES).terms() == line.terms()
    assert radial_hamiltonian(-THREE_HALVES).terms() == line.terms()


def test_radial_hamiltonian_centrifugal_term():
    # the x^-2 coefficient is (q^2 - 1/4)/2, vanishing at q = 1/2
    assert radial_hamiltonian(Fraction(1, 2)).text() == "1/2*x^(2) - 1/2*D^2"
    assert (
        radial_hamiltonian(Fraction(5, 2)).coefficient(Fraction(-2), 0).as_fraction()
        == Fraction(3)
    )


def test_reduce_seed_hits_the_line_vacuum():
    reduced = radial_reduce(omega(-THREE_HALVES, 0), THREE_HALVES)
    assert reduced.terms() == State1D.power(-1).terms()
    mirrored = radial_reduce(omega(0, -THREE_HALVES), -THREE_HALVES)
    assert mirrored.terms() == State1D.power(-1).terms()


def test_reduce_requires_the_charge_to_be_present():
    with pytest.raises(ChargeAbsent):
        radial_reduce(omega(-THREE_HALVES, 0), Fraction(1, 2))


def test_reduce_rejects_deformed_states():
    with pytest.raises(DomainError):
        radial_reduce(omega(-1, 0, lam_slope=1), Fraction(1))


def test_angular_decompose_splits_charges():
    mixed = State2D(omega(-THREE_HALVES, 0).terms() + psi0().terms())
    parts = angular_decompose(mixed)
    assert sorted(parts) == [Fraction(0), THREE_HALVES]
    for q, part in parts.items():
        assert isinstance(part, RadialProfile)
        assert part.charge == q
        # the reduced state carries the extra half power from the measure
        shifted = tuple((e + Fraction(1, 2), c) for e, c in part.profile.terms())
        assert shifted == radial_reduce(mixed, q).terms()


def test_raising_tower_reduces_to_the_line_ladder():
    # (b_pp b_pm)^n on the plane seed tracks (A_plus)^n on the line,
    # shrinking by one power of two per rung
    double_raise = lambda s: apply_2d(build_op_2d("b_pp"), apply_2d(build_op_2d("b_pm"), s))
    line_raise = build_op_1d("A_plus")
    plane = omega(-THREE_HALVES, 0)
    line = State1D.power(-1)
    scale = Fraction(1)
    for n in range(1, 4):
        plane = double_raise(plane)
        line = apply_1d(line_raise, line)
        scale /= 2
        reduced = radial_reduce(plane, THREE_HALVES)
        from kreinosc import GradedScalar

        assert reduced.terms() == line.scaled(GradedScalar.rational(scale)).terms()


def test_reduction_intertwines_the_hamiltonians():
    cases = [
        (omega(-THREE_HALVES, 0), THREE_HALVES),
        (omega(0, -THREE_HALVES), -THREE_HALVES),
        (omega(1, 0), Fraction(-1)),
        (omega(2, 3), Fraction(1)),
        (omega(-Fraction(1, 2), 0), Fraction(1, 2)),
    ]
    H2 = build_op_2d("H")
    for state, q in cases:
        via_plane = radial_reduce(apply_2d(H2, state), q)
        via_line = apply_1d(radial_hamiltonian(q), radial_reduce(state, q))
        assert via_plane.terms() == via_line.terms()


def test_bridge_audit_passes():
    report = bridge_audit(4)
    assert report["all_ok"] is True
    assert report["n_max"] == 4
    ids = [check["id"] for check in report["checks"]]
    assert "radial-hamiltonian-matches-line" in ids
    assert "vacuum-alpha-minus" in ids
    towers = [c for c in report["checks"] if c["id"].startswith("raise-tower-")]
    assert [c["expected_ratio"] for c in towers] == ["1", "1/2", "1/4", "1/8", "1/16"]
    assert all(c["ok"] for c in report["checks"])
