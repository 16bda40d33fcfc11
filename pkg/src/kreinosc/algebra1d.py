"""Half-line oscillator algebra on Gaussian-weighted power states.

States are finite sums  c * x^e * exp(-x^2/2)  on (0, inf) with exact
GradedScalar coefficients and rational exponents; the Gaussian weight is
implicit.  Operators are normal-ordered sums  c * x^p * D^q  with D =
d/dx acting on the weighted representation:

    D[x^e w] = (e x^(e-1) - x^(e+1)) w,      w = exp(-x^2/2).

Inner products are regularized moment integrals on the half line,

    (f, g) = sum c_f c_g * (1/2) gamma((e_f + e_g + 1)/2),

which extends the convergent integral int_0^inf x^m exp(-x^2) dx by
analytic continuation of gamma to negative half-integer arguments.  A
gamma pole in this one-dimensional setting raises PoleError; the
regulated two-dimensional module handles poles through Laurent data.

Everything is immutable and all functions are pure.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import DepthExceeded, DomainError, MissingParameter, PoleError
from .scalars import (
    GS_ONE,
    GS_ZERO,
    GradedScalar,
    _as_fraction,
    _check_half_integer,
    gamma_exact,
)

DEFAULT_DEPTH_LIMIT = 64
DEPTH_LIMIT_ENV = "KREIN_OSC_DEPTH_LIMIT"


def depth_limit() -> int:
    """Ladder depth cap; the environment variable overrides the default."""
    raw = os.environ.get(DEPTH_LIMIT_ENV)
    if raw is None:
        return DEFAULT_DEPTH_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise DomainError("%s must be an integer, got %r" % (DEPTH_LIMIT_ENV, raw))
    if value < 0:
        raise DomainError("%s must be non-negative" % DEPTH_LIMIT_ENV)
    return value


def _coerce_scalar(c) -> GradedScalar:
    if isinstance(c, GradedScalar):
        return c
    return GradedScalar.rational(_as_fraction(c))


def _join_signed(parts) -> str:
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


# ---------------------------------------------------------------------------
# states
# ---------------------------------------------------------------------------


class State1D:
    """Finite sum of weighted powers; exponent -> GradedScalar coefficient."""

    __slots__ = ("_terms", "label")

    def __init__(self, terms=None, label=None):
        canon: dict[Fraction, GradedScalar] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = _as_fraction(e)
                c = _coerce_scalar(c)
                if not c:
                    continue
                acc = canon.get(e, GS_ZERO) + c
                if acc:
                    canon[e] = acc
                elif e in canon:
                    del canon[e]
        object.__setattr__(self, "_terms", canon)
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):
        raise AttributeError("State1D is immutable")

    @classmethod
    def zero(cls) -> "State1D":
        return cls()

    @classmethod
    def power(cls, e, c=1, label=None) -> "State1D":
        return cls({_as_fraction(e): _coerce_scalar(c)}, label=label)

    def terms(self) -> tuple:
        return tuple(sorted(self._terms.items(), key=lambda t: t[0]))

    def exponents(self) -> tuple:
        return tuple(sorted(self._terms))

    def coefficient(self, e) -> GradedScalar:
        return self._terms.get(_as_fraction(e), GS_ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, State1D):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted((e, c) for e, c in self._terms.items())))

    def __add__(self, other):
        if not isinstance(other, State1D):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            acc = out.get(e, GS_ZERO) + c
            if acc:
                out[e] = acc
            elif e in out:
                del out[e]
        return State1D(out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c) -> "State1D":
        c = _coerce_scalar(c)
        if not c:
            return State1D()
        return State1D({e: v * c for e, v in self._terms.items()})

    def with_label(self, label) -> "State1D":
        return State1D(self._terms, label=label)

    def min_exponent(self) -> Fraction:
        if not self._terms:
            raise DomainError("zero state has no exponents")
        return min(self._terms)

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            ct = c.text()
            if ("+" in ct) or (" - " in ct):
                ct = "(" + ct + ")"
            parts.append("%s*x^(%s)" % (ct, e) if e else ct)
        return _join_signed(parts)

    def __repr__(self):
        return "State1D<%s>" % self.text()


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------


class DiffOp1D:
    """Normal-ordered operator: map (power, dorder) -> GradedScalar."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        canon: dict[tuple[Fraction, int], GradedScalar] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (p, q), c in items:
                p = _as_fraction(p)
                q = int(q)
                if q < 0:
                    raise DomainError("derivative order must be non-negative")
                c = _coerce_scalar(c)
                if not c:
                    continue
                key = (p, q)
                acc = canon.get(key, GS_ZERO) + c
                if acc:
                    canon[key] = acc
                elif key in canon:
                    del canon[key]
        object.__setattr__(self, "_terms", canon)

    def __setattr__(self, name, value):
        raise AttributeError("DiffOp1D is immutable")

    @classmethod
    def zero(cls) -> "DiffOp1D":
        return cls()

    @classmethod
    def identity(cls) -> "DiffOp1D":
        return cls({(Fraction(0), 0): GS_ONE})

    def terms(self) -> tuple:
        return tuple(sorted(self._terms.items(), key=lambda t: (t[0][1], t[0][0])))

    def coefficient(self, p, q) -> GradedScalar:
        return self._terms.get((_as_fraction(p), int(q)), GS_ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, DiffOp1D):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other):
        if not isinstance(other, DiffOp1D):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            acc = out.get(k, GS_ZERO) + c
            if acc:
                out[k] = acc
            elif k in out:
                del out[k]
        return DiffOp1D(out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c) -> "DiffOp1D":
        c = _coerce_scalar(c)
        if not c:
            return DiffOp1D()
        return DiffOp1D({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, DiffOp1D):
            return compose_1d(self, other)
        return NotImplemented

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (p, q), c in self.terms():
            ct = c.text()
            if ("+" in ct) or (" - " in ct):
                ct = "(" + ct + ")"
            bits = [ct]
            if p:
                bits.append("x^(%s)" % p)
            if q:
                bits.append("D" if q == 1 else "D^%d" % q)
            parts.append("*".join(bits))
        return _join_signed(parts)

    def __repr__(self):
        return "DiffOp1D<%s>" % self.text()


# ---------------------------------------------------------------------------
# named operators
# ---------------------------------------------------------------------------

_HALF = Fraction(1, 2)

OP_NAMES_1D = ("H1", "a_plus", "a_minus", "A_plus", "A_minus", "X", "D")


def build_op_1d(name: str, alpha=None) -> DiffOp1D:
    """Named generators of the half-line algebra.

    H1 is the oscillator with an inverse-square term, a_plus/a_minus a
    one-parameter first-order factorization pair (parameter alpha
    required), A_plus/A_minus the second-order ladder pair, X and D the
    coordinate and derivative.
    """
    if name in ("a_plus", "a_minus"):
        if alpha is None:
            raise MissingParameter("operator %s requires parameter alpha" % name)
        alpha = _as_fraction(alpha)
    elif alpha is not None:
        raise DomainError("operator %s takes no parameter" % name)
    inv_sqrt2 = GradedScalar.monomial(1, -1, 0)  # 2^(-1/2)
    if name == "H1":
        return DiffOp1D(
            {
                (Fraction(0), 2): GradedScalar.rational(Fraction(-1, 2)),
                (Fraction(2), 0): GradedScalar.rational(_HALF),
                (Fraction(-2), 0): GS_ONE,
            }
        )
    if name == "a_plus":
        return DiffOp1D(
            {
                (Fraction(0), 1): -inv_sqrt2,
                (Fraction(1), 0): inv_sqrt2,
                (Fraction(-1), 0): inv_sqrt2 * alpha,
            }
        )
    if name == "a_minus":
        return DiffOp1D(
            {
                (Fraction(0), 1): inv_sqrt2,
                (Fraction(1), 0): inv_sqrt2,
                (Fraction(-1), 0): inv_sqrt2 * alpha,
            }
        )
    if name == "A_plus":
        # (1/2) D^2 - x D + (1/2) x^2 - x^-2 - 1/2
        return DiffOp1D(
            {
                (Fraction(0), 2): GradedScalar.rational(_HALF),
                (Fraction(1), 1): GradedScalar.rational(-1),
                (Fraction(2), 0): GradedScalar.rational(_HALF),
                (Fraction(-2), 0): GradedScalar.rational(-1),
                (Fraction(0), 0): GradedScalar.rational(-_HALF),
            }
        )
    if name == "A_minus":
        # (1/2) D^2 + x D + (1/2) x^2 - x^-2 + 1/2
        return DiffOp1D(
            {
                (Fraction(0), 2): GradedScalar.rational(_HALF),
                (Fraction(1), 1): GS_ONE,
                (Fraction(2), 0): GradedScalar.rational(_HALF),
                (Fraction(-2), 0): GradedScalar.rational(-1),
                (Fraction(0), 0): GradedScalar.rational(_HALF),
            }
        )
    if name == "X":
        return DiffOp1D({(Fraction(1), 0): GS_ONE})
    if name == "D":
        return DiffOp1D({(Fraction(0), 1): GS_ONE})
    raise DomainError("unknown 1d operator %r" % name)


# ---------------------------------------------------------------------------
# action, composition, commutator
# ---------------------------------------------------------------------------


def _diff_state_terms(terms: dict) -> dict:
    # D[x^e w] = e x^(e-1) w - x^(e+1) w
    out: dict[Fraction, GradedScalar] = {}
    for e, c in terms.items():
        if e:
            k = e - 1
            acc = out.get(k, GS_ZERO) + c * e
            if acc:
                out[k] = acc
            elif k in out:
                del out[k]
        k = e + 1
        acc = out.get(k, GS_ZERO) - c
        if acc:
            out[k] = acc
        elif k in out:
            del out[k]
    return out


def apply_1d(op: DiffOp1D, s: State1D) -> State1D:
    """Apply a normal-ordered operator to a weighted state."""
    total: dict[Fraction, GradedScalar] = {}
    base = dict(s._terms)
    for (p, q), c in op._terms.items():
        cur = base
        for _ in range(q):
            cur = _diff_state_terms(cur)
        for e, v in cur.items():
            k = e + p
            acc = total.get(k, GS_ZERO) + v * c
            if acc:
                total[k] = acc
            elif k in total:
                del total[k]
    return State1D(total)


def _falling(p: Fraction, j: int) -> Fraction:
    out = Fraction(1)
    for i in range(j):
        out *= p - i
    return out


def compose_1d(f: DiffOp1D, g: DiffOp1D) -> DiffOp1D:
    """Normal-ordered product f g.

    Uses D^q x^p = sum_j C(q, j) (p)_j x^(p-j) D^(q-j) with the falling
    factorial (p)_j, valid for rational p.
    """
    out: dict[tuple[Fraction, int], GradedScalar] = {}
    for (p1, q1), c1 in f._terms.items():
        for (p2, q2), c2 in g._terms.items():
            c12 = c1 * c2
            for j in range(q1 + 1):
                w = _falling(p2, j) * math.comb(q1, j)
                if not w:
                    continue
                key = (p1 + p2 - j, q1 - j + q2)
                acc = out.get(key, GS_ZERO) + c12 * w
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
    return DiffOp1D(out)


def commutator_1d(f: DiffOp1D, g: DiffOp1D) -> DiffOp1D:
    return compose_1d(f, g) - compose_1d(g, f)


# ---------------------------------------------------------------------------
# vacua, ladders, spectra
# ---------------------------------------------------------------------------


def solve_vacuum_1d(alpha) -> State1D:
    """Weighted power state annihilated by a_minus(alpha): x^(-alpha) w."""
    alpha = _as_fraction(alpha)
    vac = State1D.power(-alpha, 1, label="vacuum(alpha=%s)" % alpha)
    check = apply_1d(build_op_1d("a_minus", alpha), vac)
    if check:
        raise DomainError("vacuum candidate not annihilated for alpha=%s" % alpha)
    return vac


def ladder_state_1d(alpha, n: int) -> tuple[State1D, Fraction]:
    """n-th raising-ladder state over the alpha vacuum with its energy.

    Only alpha in {-2, 1} closes the ladder on H1; the energy is
    1/2 - alpha + 2n.  n is capped by the configured depth limit.
    """
    alpha = _as_fraction(alpha)
    if alpha not in (Fraction(-2), Fraction(1)):
        raise DomainError("ladder family requires alpha -2 or 1, got %s" % alpha)
    n = int(n)
    if n < 0:
        raise DomainError("ladder index must be non-negative")
    limit = depth_limit()
    if n > limit:
        raise DepthExceeded("ladder index %d exceeds depth limit %d" % (n, limit))
    raise_op = build_op_1d("A_plus")
    state = solve_vacuum_1d(alpha)
    for _ in range(n):
        state = apply_1d(raise_op, state)
    energy = Fraction(1, 2) - alpha + 2 * n
    return state.with_label("ladder(alpha=%s,n=%d)" % (alpha, n)), energy


def eigencheck_1d(op: DiffOp1D, s: State1D):
    """Exact eigenvalue of s under op, or None.

    Returns a Fraction when the multiplier is rational, otherwise the
    GradedScalar multiplier.
    """
    if not s:
        raise DomainError("eigencheck requires a nonzero state")
    image = apply_1d(op, s)
    if not image:
        return Fraction(0)
    if set(image._terms) != set(s._terms):
        return None
    e0 = min(s._terms)
    lam = image._terms[e0].try_div(s._terms[e0])
    if lam is None:
        return None
    if s.scaled(lam) != image:
        return None
    frac = lam.as_fraction()
    return frac if frac is not None else lam


# ---------------------------------------------------------------------------
# inner product and localization
# ---------------------------------------------------------------------------


def inner_1d(f: State1D, g: State1D) -> GradedScalar:
    """Regularized half-line inner product.

    Each exponent pair contributes c_f c_g (1/2) gamma((e_f+e_g+1)/2);
    gamma is continued to negative half-integers, and a genuine gamma
    pole raises PoleError.  The whole pairing is domain-scanned before
    any gamma is evaluated, so a non-half-integer argument raises
    DomainError ahead of any pole report; either failure is symmetric
    under swapping f and g.
    """
    moments = [
        (ef + eg, cf * cg)
        for ef, cf in f._terms.items()
        for eg, cg in g._terms.items()
    ]
    for e, _ in moments:
        _check_half_integer((e + 1) / 2)
    acc = GS_ZERO
    for e, c in moments:
        arg = (e + 1) / 2
        try:
            val = gamma_exact(arg)
        except PoleError:
            raise PoleError(
                "moment integral x^(%s) hits a gamma pole at %s" % (e, arg)
            )
        acc = acc + c * val * Fraction(1, 2)
    return acc


@dataclass(frozen=True)
class Divergence:
    """Small-distance behaviour of a squared-state density integral."""

    kind: str  # "none" | "log" | "power"
    order: Fraction | None = None

    def __str__(self):
        if self.kind == "power":
            return "power(%s)" % self.order
        return self.kind


DIV_NONE = Divergence("none")
DIV_LOG = Divergence("log")


def localization_1d(s: State1D) -> tuple[bool, Divergence]:
    """Divergence class of int_eps |s|^2 near the origin.

    With e_min the smallest exponent, the density behaves like
    x^(2 e_min): the integral diverges as a power of order -(2 e_min + 1)
    when 2 e_min < -1, logarithmically at the boundary 2 e_min = -1, and
    converges otherwise.  Any divergence marks the state as localized
    (the density ratio concentrates at the origin).
    """
    if not s:
        raise DomainError("localization of the zero state is undefined")
    e_min = s.min_exponent()
    t = 2 * e_min
    if t < -1:
        return True, Divergence("power", -(t + 1))
    if t == -1:
        return True, DIV_LOG
    return False, DIV_NONE
