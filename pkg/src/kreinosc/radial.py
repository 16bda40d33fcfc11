"""Angular decomposition of planar states and the radial correspondence.

A slope-free planar state splits over angular charges q = -lam + mu.
Each charge block zbar^lam z^mu exp(-zbar z/2), written z = r e^{i phi},
carries the radial dependence r^(lam+mu) e^(-r^2/2); pulling out the
half-power of r that flattens the radial measure gives a line state
r^(lam+mu+1/2) w(r) on which the planar Hamiltonian acts as

    (1/2) (-D^2 + r^2 + (q^2 - 1/4) r^(-2)),

a line Hamiltonian with inverse-square coupling g = (q^2 - 1/4)/2.  At
q = +-3/2 the coupling is exactly the unit one used by the line algebra,
which is what bridge_audit exercises.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra1d import DiffOp1D, State1D, apply_1d, build_op_1d, solve_vacuum_1d
from .algebra2d import State2D, apply_2d, build_op_2d, compose_2d, omega
from .errors import ChargeAbsent, DomainError
from .scalars import EpsScalar, GradedScalar, _as_fraction

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RadialProfile:
    """One angular block: its charge and the bare radial profile.

    ``profile`` collects r^(lam+mu) coefficients without the measure
    half-power; ``reduced`` (from radial_reduce) includes it.
    """

    charge: Fraction
    profile: State1D


def _coeff_to_graded(c: EpsScalar) -> GradedScalar:
    if c.degree() > 0:
        raise DomainError("angular decomposition requires eps-free coefficients")
    return c.coeff(0)


def angular_decompose(s: State2D) -> dict[Fraction, RadialProfile]:
    """Split a slope-free state into charge blocks with radial profiles."""
    if s.has_slopes():
        raise DomainError("angular decomposition applies to slope-free states")
    blocks: dict[Fraction, dict[Fraction, GradedScalar]] = {}
    for (lam, _ls, mu, _ms), c in s._terms.items():
        q = -lam + mu
        block = blocks.setdefault(q, {})
        e = lam + mu
        acc = block.get(e, GradedScalar.zero()) + _coeff_to_graded(c)
        if acc:
            block[e] = acc
        elif e in block:
            del block[e]
    out = {}
    for q, block in blocks.items():
        if block:
            out[q] = RadialProfile(q, State1D(block))
    return out


def radial_reduce(s: State2D, q) -> State1D:
    """Radial line state of the charge-q block, measure factor included.

    Exponents are those of the planar monomials plus one half.
    """
    q = _as_fraction(q)
    blocks = angular_decompose(s)
    if q not in blocks:
        raise ChargeAbsent("state has no charge-%s component" % q)
    prof = blocks[q].profile
    shifted = {e + _HALF: c for e, c in prof.terms()}
    return State1D(shifted, label="radial(q=%s)" % q)


def radial_hamiltonian(q) -> DiffOp1D:
    """(1/2)(-D^2 + r^2 + (q^2 - 1/4) r^(-2)) acting on line states."""
    q = _as_fraction(q)
    g = q * q - Fraction(1, 4)
    terms = {
        (Fraction(0), 2): GradedScalar.rational(Fraction(-1, 2)),
        (Fraction(2), 0): GradedScalar.rational(Fraction(1, 2)),
    }
    if g:
        terms[(Fraction(-2), 0)] = GradedScalar.rational(g / 2)
    return DiffOp1D(terms)


def _proportionality(a: State1D, b: State1D):
    """Exact ratio a/b for line states, or None."""
    if a.is_zero() or b.is_zero():
        return None
    ta = dict(a.terms())
    tb = dict(b.terms())
    if set(ta) != set(tb):
        return None
    e0 = min(ta)
    num, den = ta[e0], tb[e0]
    for e in ta:
        if ta[e] * den != tb[e] * num:
            return None
    return num.try_div(den)


def bridge_audit(n_max: int = 4) -> dict:
    """Cross-check planar towers against line towers through the reduction.

    For each n up to n_max the raised planar state (b_pp b_pm)^n
    Omega_{-3/2,0} reduces at charge 3/2 to (1/2)^n (A_plus)^n Psi_0 of
    the alpha = 1 line family, and Omega_{3/2,0} reduces at charge -3/2
    to the alpha = -2 line vacuum r^2 w.  Lowering transports back down
    with b_mp b_mm matching (1/2) A_minus per application.  Also checks
    that the paired second-order maps are order-insensitive.
    """
    n_max = int(n_max)
    if n_max < 0 or n_max > 10:
        raise DomainError("n_max must be between 0 and 10")
    checks = []

    b_pp = build_op_2d("b_pp")
    b_pm = build_op_2d("b_pm")
    b_mp = build_op_2d("b_mp")
    b_mm = build_op_2d("b_mm")
    raise2 = compose_2d(b_pp, b_pm)
    lower2 = compose_2d(b_mp, b_mm)
    a_plus = build_op_1d("A_plus")
    a_minus = build_op_1d("A_minus")

    checks.append(
        {
            "id": "raising-order-insensitive",
            "ok": compose_2d(b_pp, b_pm) == compose_2d(b_pm, b_pp),
        }
    )
    checks.append(
        {
            "id": "lowering-order-insensitive",
            "ok": compose_2d(b_mp, b_mm) == compose_2d(b_mm, b_mp),
        }
    )

    # alpha = +1 branch: Omega_{-3/2, 0} has charge 3/2 and reduces to
    # r^(-1) w, the alpha = 1 line vacuum.
    q = Fraction(3, 2)
    planar = omega(Fraction(-3, 2), 0)
    line = solve_vacuum_1d(Fraction(1))
    half_pow = Fraction(1)
    for n in range(n_max + 1):
        got = radial_reduce(planar, q)
        ratio = _proportionality(got, line)
        checks.append(
            {
                "id": "raise-tower-alpha-plus-n%d" % n,
                "ok": ratio == half_pow,
                "expected_ratio": str(half_pow),
                "got_ratio": None if ratio is None else ratio.text(),
            }
        )
        if n < n_max:
            planar = apply_2d(raise2, planar)
            line = apply_1d(a_plus, line)
            half_pow = half_pow / 2

    # lowering transport: from the top of the tower back down.  Each
    # b_mp b_mm application matches (1/2) A_minus through the reduction,
    # so the accumulated constant halves again per step: with
    # reduce(planar) = half_pow * line going in, the lowered pair obeys
    # reduce(lower2 planar) = (half_pow/2) * A_minus line.
    for k in range(1, n_max + 1):
        down_planar = apply_2d(lower2, planar)
        down_line = apply_1d(a_minus, line)
        half_pow = half_pow / 2
        got = radial_reduce(down_planar, q) if down_planar else State1D.zero()
        checks.append(
            {
                "id": "lower-transport-alpha-plus-k%d" % k,
                "ok": got == down_line.scaled(half_pow),
            }
        )
        planar = down_planar
        line = down_line
        if planar.is_zero() or line.is_zero():
            break

    # alpha = -2 branch: Omega_{3/2, 0} has charge -3/2; at q = -3/2 the
    # radial Hamiltonian is the same line operator, and the reduction is
    # r^2 w, the alpha = -2 vacuum.
    got = radial_reduce(omega(Fraction(3, 2), 0), Fraction(-3, 2))
    want = solve_vacuum_1d(Fraction(-2))
    checks.append(
        {
            "id": "vacuum-alpha-minus",
            "ok": _proportionality(got, want) == Fraction(1),
        }
    )

    checks.append(
        {
            "id": "radial-hamiltonian-matches-line",
            "ok": radial_hamiltonian(Fraction(3, 2)) == build_op_1d("H1")
            and radial_hamiltonian(Fraction(-3, 2)) == build_op_1d("H1"),
        }
    )

    return {
        "n_max": n_max,
        "checks": checks,
        "all_ok": all(c["ok"] for c in checks),
    }
