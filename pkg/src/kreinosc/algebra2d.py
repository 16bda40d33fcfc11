"""Planar oscillator algebra in conjugate complex coordinates.

States are finite sums  c * zbar^L * z^M * exp(-zbar z / 2)  where the
exponents may carry an integer eps-slope in {0, 1}: L = lam + lam_slope
* eps, M = mu + mu_slope * eps.  Coefficients are polynomials in eps
over the exact graded field.  The Wirtinger pair used here carries a
factor two,

    dz[z^M]    = 2 M z^(M-1),      dz[exp(-zbar z/2)]    = -zbar * exp(..),
    dzbar[zbar^L] = 2 L zbar^(L-1), dzbar[exp(-zbar z/2)] = -z * exp(..),

so [dz, z] = [dzbar, zbar] = 2 on these states.

The inner product integrates conj(f) * g over the plane.  Writing each
term pair in polar coordinates, the angular factor exp(i (q_g - q_f)
phi) integrates to zero unless the angular charges q = -L + M agree
identically as functions of eps; matching pairs leave the radial moment

    pi * gamma((lam_f + mu_f + lam_g + mu_g)/2 + 1  (+ slope terms))

evaluated through the Laurent expansion of gamma in eps.  Charge
sectors therefore never mix, exactly.

Everything is immutable and all functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra1d import DIV_LOG, DIV_NONE, Divergence, _join_signed
from .errors import DomainError, NotConvergent, PoleError
from .scalars import (
    GS_ONE,
    GS_PI,
    GS_ZERO,
    EpsScalar,
    GradedScalar,
    LaurentValue,
    _as_fraction,
    _check_half_integer,
    gamma_exact,
    gamma_laurent,
)

_HALF = Fraction(1, 2)


def _coerce_eps(c) -> EpsScalar:
    if isinstance(c, EpsScalar):
        return c
    return EpsScalar.of(c)


def _check_slope(s) -> int:
    s = int(s)
    if s not in (0, 1):
        raise DomainError("eps slopes are restricted to 0 or 1, got %s" % s)
    return s


# ---------------------------------------------------------------------------
# states
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Monomial2D:
    """One weighted monomial zbar^(lam + lam_slope*eps) z^(mu + mu_slope*eps)."""

    lam: Fraction
    lam_slope: int
    mu: Fraction
    mu_slope: int

    def charge(self) -> tuple[Fraction, int]:
        """Angular charge as (constant, eps-slope): q = -L + M."""
        return (-self.lam + self.mu, -self.lam_slope + self.mu_slope)

    def degree_sum(self) -> tuple[Fraction, int]:
        """lam + mu as (constant, eps-slope)."""
        return (self.lam + self.mu, self.lam_slope + self.mu_slope)

    def key(self):
        return (self.lam, self.lam_slope, self.mu, self.mu_slope)

    def text(self) -> str:
        lt = str(self.lam) + ("+e" if self.lam_slope else "")
        mt = str(self.mu) + ("+e" if self.mu_slope else "")
        return "zbar^(%s)*z^(%s)" % (lt, mt)


class State2D:
    """Finite sum of weighted monomials with a renormalization marker.

    ``renorm_power`` is 0 for plain states and 1/2 for states drawn from
    an eps-deformed sector, recording the sqrt(eps) prefactor that the
    renormalized inner product applies.
    """

    __slots__ = ("_terms", "renorm_power")

    def __init__(self, terms=None, renorm_power=Fraction(0)):
        renorm_power = _as_fraction(renorm_power)
        if renorm_power not in (Fraction(0), _HALF):
            raise DomainError("renorm power must be 0 or 1/2")
        canon: dict[tuple, EpsScalar] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, c in items:
                if not isinstance(mono, Monomial2D):
                    lam, ls, mu, ms = mono
                    mono = Monomial2D(
                        _as_fraction(lam), _check_slope(ls), _as_fraction(mu), _check_slope(ms)
                    )
                else:
                    _check_slope(mono.lam_slope)
                    _check_slope(mono.mu_slope)
                c = _coerce_eps(c)
                if not c:
                    continue
                key = mono.key()
                acc = canon.get(key, EpsScalar.zero()) + c
                if acc:
                    canon[key] = acc
                elif key in canon:
                    del canon[key]
        object.__setattr__(self, "_terms", canon)
        object.__setattr__(self, "renorm_power", renorm_power)

    def __setattr__(self, name, value):
        raise AttributeError("State2D is immutable")

    @classmethod
    def zero(cls) -> "State2D":
        return cls()

    def terms(self) -> tuple:
        """Sorted (Monomial2D, EpsScalar) pairs."""
        out = []
        for key in sorted(self._terms):
            lam, ls, mu, ms = key
            out.append((Monomial2D(lam, ls, mu, ms), self._terms[key]))
        return tuple(out)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, State2D):
            return NotImplemented
        return self._terms == other._terms and self.renorm_power == other.renorm_power

    def __hash__(self):
        return hash(
            (self.renorm_power, tuple(sorted(self._terms.items())))
        )

    def __add__(self, other):
        if not isinstance(other, State2D):
            return NotImplemented
        if self.renorm_power != other.renorm_power:
            raise DomainError("cannot add states with different renorm powers")
        out = dict(self._terms)
        for k, c in other._terms.items():
            acc = out.get(k, EpsScalar.zero()) + c
            if acc:
                out[k] = acc
            elif k in out:
                del out[k]
        return _state2d_raw(out, self.renorm_power)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c) -> "State2D":
        c = _coerce_eps(c)
        if not c:
            return State2D(renorm_power=self.renorm_power)
        return _state2d_raw(
            {k: v * c for k, v in self._terms.items()}, self.renorm_power
        )

    def with_renorm(self, power) -> "State2D":
        return _state2d_raw(dict(self._terms), _as_fraction(power))

    def has_slopes(self) -> bool:
        return any(k[1] or k[3] for k in self._terms)

    def charges(self) -> set:
        return {Monomial2D(*k).charge() for k in self._terms}

    def limit_eps0(self) -> "State2D":
        """Termwise eps -> 0 limit: slopes dropped, coefficients at eps = 0."""
        out: dict[tuple, EpsScalar] = {}
        for (lam, _ls, mu, _ms), c in self._terms.items():
            c0 = c.eval0()
            if not c0:
                continue
            key = (lam, 0, mu, 0)
            acc = out.get(key, EpsScalar.zero()) + EpsScalar.of(c0)
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
        return _state2d_raw(out, Fraction(0))

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.terms():
            ct = c.text()
            if "+" in ct[1:] or "-" in ct[1:]:
                ct = "(" + ct + ")"
            parts.append("%s*%s" % (ct, mono.text()))
        return _join_signed(parts)

    def __repr__(self):
        return "State2D<%s>" % self.text()


def _state2d_raw(terms: dict, renorm_power) -> State2D:
    out = State2D(renorm_power=renorm_power)
    object.__setattr__(out, "_terms", terms)
    return out


def omega(lam, mu, lam_slope=0, mu_slope=0) -> State2D:
    """Unit-coefficient weighted monomial state."""
    return State2D(
        {
            Monomial2D(
                _as_fraction(lam), _check_slope(lam_slope), _as_fraction(mu), _check_slope(mu_slope)
            ): EpsScalar.one()
        }
    )


def psi0() -> State2D:
    """The weighted unit state zbar^0 z^0."""
    return omega(0, 0)


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------


class DiffOp2D:
    """Normal-ordered operator: map (zbar_pow, z_pow, dzbar, dz) -> GradedScalar."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        canon: dict[tuple, GradedScalar] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (pb, p, rb, r), c in items:
                pb = _as_fraction(pb)
                p = _as_fraction(p)
                rb = int(rb)
                r = int(r)
                if rb < 0 or r < 0:
                    raise DomainError("derivative order must be non-negative")
                if isinstance(c, EpsScalar):
                    raise DomainError("operator coefficients carry no eps dependence")
                if not isinstance(c, GradedScalar):
                    c = GradedScalar.rational(_as_fraction(c))
                if not c:
                    continue
                key = (pb, p, rb, r)
                acc = canon.get(key, GS_ZERO) + c
                if acc:
                    canon[key] = acc
                elif key in canon:
                    del canon[key]
        object.__setattr__(self, "_terms", canon)

    def __setattr__(self, name, value):
        raise AttributeError("DiffOp2D is immutable")

    @classmethod
    def zero(cls) -> "DiffOp2D":
        return cls()

    @classmethod
    def identity(cls) -> "DiffOp2D":
        return cls({(Fraction(0), Fraction(0), 0, 0): GS_ONE})

    def terms(self) -> tuple:
        return tuple(
            sorted(self._terms.items(), key=lambda t: (t[0][2], t[0][3], t[0][0], t[0][1]))
        )

    def coefficient(self, pb, p, rb, r) -> GradedScalar:
        return self._terms.get(
            (_as_fraction(pb), _as_fraction(p), int(rb), int(r)), GS_ZERO
        )

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, DiffOp2D):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other):
        if not isinstance(other, DiffOp2D):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            acc = out.get(k, GS_ZERO) + c
            if acc:
                out[k] = acc
            elif k in out:
                del out[k]
        return DiffOp2D(out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c) -> "DiffOp2D":
        if isinstance(c, (int, Fraction)):
            c = GradedScalar.rational(_as_fraction(c))
        if not c:
            return DiffOp2D()
        return DiffOp2D({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, DiffOp2D):
            return compose_2d(self, other)
        return NotImplemented

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (pb, p, rb, r), c in self.terms():
            ct = c.text()
            if ("+" in ct) or (" - " in ct):
                ct = "(" + ct + ")"
            bits = [ct]
            if pb:
                bits.append("zbar^(%s)" % pb)
            if p:
                bits.append("z^(%s)" % p)
            if rb:
                bits.append("dzbar" if rb == 1 else "dzbar^%d" % rb)
            if r:
                bits.append("dz" if r == 1 else "dz^%d" % r)
            parts.append("*".join(bits))
        return _join_signed(parts)

    def __repr__(self):
        return "DiffOp2D<%s>" % self.text()


OP_NAMES_2D = ("H", "Q", "b_pp", "b_pm", "b_mp", "b_mm", "Z", "ZBAR", "DZ", "DZBAR")


def build_op_2d(name: str) -> DiffOp2D:
    """Named generators of the planar algebra.

    H and Q are built from their differential forms (the ground truth
    used by the identity audit); the four b operators are the
    half-normalized first-order ladder pair for each rotation sense.
    """
    half = GradedScalar.rational(_HALF)
    zero = Fraction(0)
    if name == "H":
        # (1/2)(-dzbar dz + zbar z)
        return DiffOp2D(
            {
                (zero, zero, 1, 1): -half,
                (Fraction(1), Fraction(1), 0, 0): half,
            }
        )
    if name == "Q":
        # (1/2)(-zbar dzbar + z dz)
        return DiffOp2D(
            {
                (Fraction(1), zero, 1, 0): -half,
                (zero, Fraction(1), 0, 1): half,
            }
        )
    if name == "b_pp":
        # (1/2)(-dzbar + z)
        return DiffOp2D({(zero, zero, 1, 0): -half, (zero, Fraction(1), 0, 0): half})
    if name == "b_mp":
        # (1/2)(dz + zbar)
        return DiffOp2D({(zero, zero, 0, 1): half, (Fraction(1), zero, 0, 0): half})
    if name == "b_pm":
        # (1/2)(-dz + zbar)
        return DiffOp2D({(zero, zero, 0, 1): -half, (Fraction(1), zero, 0, 0): half})
    if name == "b_mm":
        # (1/2)(dzbar + z)
        return DiffOp2D({(zero, zero, 1, 0): half, (zero, Fraction(1), 0, 0): half})
    if name == "Z":
        return DiffOp2D({(zero, Fraction(1), 0, 0): GS_ONE})
    if name == "ZBAR":
        return DiffOp2D({(Fraction(1), zero, 0, 0): GS_ONE})
    if name == "DZ":
        return DiffOp2D({(zero, zero, 0, 1): GS_ONE})
    if name == "DZBAR":
        return DiffOp2D({(zero, zero, 1, 0): GS_ONE})
    raise DomainError("unknown 2d operator %r" % name)


# ---------------------------------------------------------------------------
# action, composition, commutator
# ---------------------------------------------------------------------------


def _dz_terms(terms: dict) -> dict:
    # dz: (lam, mu) -> coeff*2*(mu + mu_slope*eps) at (lam, mu-1), plus
    #     -coeff at (lam+1, mu) from the weight.
    out: dict[tuple, EpsScalar] = {}

    def push(key, c):
        acc = out.get(key, EpsScalar.zero()) + c
        if acc:
            out[key] = acc
        elif key in out:
            del out[key]

    for (lam, ls, mu, ms), c in terms.items():
        mult = EpsScalar.affine(2 * mu, 2 * ms) if ms else EpsScalar.of(2 * mu)
        if mult:
            push((lam, ls, mu - 1, ms), c * mult)
        push((lam + 1, ls, mu, ms), -c)
    return out


def _dzbar_terms(terms: dict) -> dict:
    out: dict[tuple, EpsScalar] = {}

    def push(key, c):
        acc = out.get(key, EpsScalar.zero()) + c
        if acc:
            out[key] = acc
        elif key in out:
            del out[key]

    for (lam, ls, mu, ms), c in terms.items():
        mult = EpsScalar.affine(2 * lam, 2 * ls) if ls else EpsScalar.of(2 * lam)
        if mult:
            push((lam - 1, ls, mu, ms), c * mult)
        push((lam, ls, mu + 1, ms), -c)
    return out


def apply_2d(op: DiffOp2D, s: State2D) -> State2D:
    """Apply a normal-ordered operator; the renorm marker is preserved."""
    total: dict[tuple, EpsScalar] = {}
    for (pb, p, rb, r), c in op._terms.items():
        cur = dict(s._terms)
        for _ in range(r):
            cur = _dz_terms(cur)
        for _ in range(rb):
            cur = _dzbar_terms(cur)
        for (lam, ls, mu, ms), v in cur.items():
            key = (lam + pb, ls, mu + p, ms)
            acc = total.get(key, EpsScalar.zero()) + v * c
            if acc:
                total[key] = acc
            elif key in total:
                del total[key]
    return _state2d_raw(total, s.renorm_power)


def _falling(p: Fraction, j: int) -> Fraction:
    out = Fraction(1)
    for i in range(j):
        out *= p - i
    return out


def compose_2d(f: DiffOp2D, g: DiffOp2D) -> DiffOp2D:
    """Normal-ordered product f g.

    The factor-two Wirtinger convention turns the reordering rule into
    d^s x^p = sum_j C(s, j) 2^j (p)_j x^(p-j) d^(s-j), independently in
    the holomorphic and antiholomorphic variables.
    """
    out: dict[tuple, GradedScalar] = {}
    for (pb1, p1, rb1, r1), c1 in f._terms.items():
        for (pb2, p2, rb2, r2), c2 in g._terms.items():
            c12 = c1 * c2
            for jb in range(rb1 + 1):
                wb = _falling(pb2, jb) * math.comb(rb1, jb) * (2**jb)
                if not wb:
                    continue
                for jz in range(r1 + 1):
                    wz = _falling(p2, jz) * math.comb(r1, jz) * (2**jz)
                    if not wz:
                        continue
                    key = (pb1 + pb2 - jb, p1 + p2 - jz, rb1 - jb + rb2, r1 - jz + r2)
                    acc = out.get(key, GS_ZERO) + c12 * (wb * wz)
                    if acc:
                        out[key] = acc
                    elif key in out:
                        del out[key]
    return DiffOp2D(out)


def commutator_2d(f: DiffOp2D, g: DiffOp2D) -> DiffOp2D:
    return compose_2d(f, g) - compose_2d(g, f)


# ---------------------------------------------------------------------------
# closed-form ladder action
# ---------------------------------------------------------------------------


def ladder_closed_form(which: str, lam, mu) -> tuple:
    """Action of one b operator on a bare monomial, as (coeff, lam', mu') triples.

    Serves as an independent oracle for apply_2d on slope-free states.
    """
    lam = _as_fraction(lam)
    mu = _as_fraction(mu)
    if which == "b_pp":
        return ((-lam, lam - 1, mu), (Fraction(1), lam, mu + 1))
    if which == "b_mp":
        return ((mu, lam, mu - 1),)
    if which == "b_pm":
        return ((-mu, lam, mu - 1), (Fraction(1), lam + 1, mu))
    if which == "b_mm":
        return ((lam, lam - 1, mu),)
    raise DomainError("unknown ladder operator %r" % which)


# ---------------------------------------------------------------------------
# inner products
# ---------------------------------------------------------------------------


def inner_2d(f: State2D, g: State2D) -> LaurentValue:
    """Charge-matched regularized inner product, as Laurent data in eps.

    Only term pairs whose angular charges agree identically as functions
    of eps contribute; each contributes

        c_f * c_g * pi * gamma((lam_f + mu_f + lam_g + mu_g)/2 + 1),

    evaluated through gamma's Laurent expansion when the eps slope of
    the argument is nonzero.  The accumulated value is then shifted by
    eps^(renorm_f + renorm_g).  A gamma pole met with zero slope has no
    regulator and raises PoleError.  The matched pairs are domain-scanned
    before any gamma is evaluated, so a non-half-integer argument raises
    DomainError ahead of any pole report; either failure is symmetric
    under swapping f and g.
    """
    matched = []
    for (lam_f, lsf, mu_f, msf), cf in f._terms.items():
        qf = (-lam_f + mu_f, -lsf + msf)
        for (lam_g, lsg, mu_g, msg), cg in g._terms.items():
            if qf != (-lam_g + mu_g, -lsg + msg):
                continue
            base = (lam_f + mu_f + lam_g + mu_g) / 2 + 1
            slope = Fraction(lsf + msf + lsg + msg, 2)
            matched.append((base, slope, cf * cg))
    for base, _, _ in matched:
        _check_half_integer(base)
    total = LaurentValue.zero()
    for base, slope, coeff in matched:
        if slope:
            val = gamma_laurent(base, slope)
        else:
            try:
                val = LaurentValue.exact(gamma_exact(base))
            except PoleError:
                raise PoleError(
                    "radial moment hits a gamma pole at %s with no eps "
                    "regulator; deform the exponents" % base
                )
        total = total + val.times_scalar(GS_PI).times_eps_poly(coeff)
    return total.shifted(f.renorm_power + g.renorm_power)


def renorm_inner(f: State2D, g: State2D) -> GradedScalar:
    """eps^0 coefficient of the renormalized inner product.

    This is the eps -> 0 limit of eps^(renorm_f + renorm_g) (f_eps,
    g_eps); only gamma residues contribute for deformed sector pairs.
    NotConvergent if a pole survives the shift.
    """
    value = inner_2d(f, g)
    if value.pole:
        raise NotConvergent(
            "renormalized limit diverges: pole coefficient %s remains"
            % value.pole.text()
        )
    if value.finite is None:
        raise DomainError(
            "constant term involves digamma values excluded from exact mode"
        )
    return value.finite


def eigencheck_2d(op: DiffOp2D, s: State2D):
    """Exact eigenvalue of s under op, or None.

    Returns a Fraction when the multiplier is a constant rational,
    otherwise the EpsScalar multiplier.
    """
    if not s:
        raise DomainError("eigencheck requires a nonzero state")
    image = apply_2d(op, s)
    if not image:
        return Fraction(0)
    if set(image._terms) != set(s._terms):
        return None
    k0 = min(s._terms)
    lam = image._terms[k0].try_div(s._terms[k0])
    if lam is None:
        return None
    if s.scaled(lam) != image.with_renorm(s.renorm_power):
        return None
    frac = lam.as_fraction()
    return frac if frac is not None else lam


def states_proportional(a: State2D, b: State2D):
    """Exact proportionality a = (num/den) b, or None.

    Decided by cross-multiplication in the eps-polynomial ring, so the
    ratio may be a rational function of eps; when the quotient is itself
    polynomial the pair is reduced to (quotient, 1).
    """
    if not a or not b:
        raise DomainError("proportionality requires nonzero states")
    if set(a._terms) != set(b._terms):
        return None
    k0 = min(a._terms)
    num = a._terms[k0]
    den = b._terms[k0]
    for k in a._terms:
        if a._terms[k] * den != b._terms[k] * num:
            return None
    q = num.try_div(den)
    if q is not None:
        return (q, EpsScalar.one())
    return (num, den)


# ---------------------------------------------------------------------------
# localization
# ---------------------------------------------------------------------------


def localization_2d(s: State2D) -> tuple[bool, Divergence]:
    """Divergence class of the small-disc integral of |s|^2.

    For a slope-free state with t_min the smallest lam + mu, the radial
    density carries r^(2 t_min + 1): the integral diverges as a power of
    order -(2 t_min + 2) when 2 t_min + 2 < 0 and logarithmically at the
    boundary 2 t_min + 2 = 0.
    """
    if not s:
        raise DomainError("localization of the zero state is undefined")
    if s.has_slopes():
        raise DomainError("localization applies to slope-free states")
    t_min = min(lam + mu for (lam, _ls, mu, _ms) in s._terms)
    t = 2 * t_min + 2
    if t < 0:
        return True, Divergence("power", -t)
    if t == 0:
        return True, DIV_LOG
    return False, DIV_NONE
