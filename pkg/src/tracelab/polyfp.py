"""Multivariate polynomial arithmetic over prime fields.

Provides monomial orders (degrevlex, lex), normal forms with multiplier
tracking, Buchberger's algorithm, and standard-monomial bases of
zero-dimensional quotients.  Coefficients live in F_p; monomials are plain
tuples of exponents, one entry per variable.

Polynomial text grammar (used by the CLI and by tests):
    poly   :=  term ('+' term)*
    term   :=  int | int '*' powers | powers
    powers :=  power ('*' power)*
    power  :=  var | var '^' int
Whitespace is ignored everywhere.
"""

from __future__ import annotations

import itertools
import re

from .errors import (
    NotZeroDimensionalError,
    PolynomialSyntaxError,
    StructureError,
)

Monomial = tuple  # exponent vectors, one non-negative int per variable


class PrimeField:
    """Arithmetic modulo a prime p.  Elements are plain ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise StructureError(f"{p} is not prime")
        self.p = p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))

def mon_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b componentwise."""
    return all(x <= y for x, y in zip(a, b))

def mon_div(b: Monomial, a: Monomial) -> Monomial:
    """Exponent vector of b/a; caller guarantees a divides b."""
    return tuple(x - y for x, y in zip(b, a))

def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))

def mon_degree(m: Monomial) -> int:
    return sum(m)


def display_key(m: Monomial):
    """Graded key used for human-facing monomial sequences (1, x, y, x^2, ...)."""
    return (sum(m), tuple(reversed(m)))


class MonomialOrder:
    """A total, multiplicative well-order on monomials."""

    __slots__ = ("kind",)

    KINDS = ("degrevlex", "lex")

    def __init__(self, kind: str):
        if kind not in self.KINDS:
            raise StructureError(f"unknown monomial order {kind!r}")
        self.kind = kind

    def key(self, m: Monomial):
        if self.kind == "degrevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        return tuple(m)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(("MonomialOrder", self.kind))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")

_INT_RE = re.compile(r"[+-]?\d+$")
_POWER_RE = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


class Polynomial:
    """Element of F_p[variables], stored as a canonical monomial -> coefficient map."""

    __slots__ = ("field", "variables", "terms")

    def __init__(self, field: PrimeField, variables, terms):
        self.field = field
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for mon, coeff in terms.items():
            if len(mon) != n:
                raise StructureError("monomial length does not match variable count")
            c = coeff % field.p
            if c:
                clean[tuple(mon)] = c
        self.terms = clean

    @classmethod
    def zero(cls, field, variables):
        return cls(field, variables, {})

    @classmethod
    def constant(cls, field, variables, c):
        return cls(field, variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def variable(cls, field, variables, name):
        variables = tuple(variables)
        idx = variables.index(name)
        mon = tuple(1 if i == idx else 0 for i in range(len(variables)))
        return cls(field, variables, {mon: 1})

    @classmethod
    def parse(cls, field: PrimeField, variables, text: str) -> "Polynomial":
        """Parse the polynomial text grammar documented at module level."""
        variables = tuple(variables)
        index = {v: i for i, v in enumerate(variables)}
        s = re.sub(r"\s+", "", text)
        if not s:
            raise PolynomialSyntaxError("empty polynomial text")
        terms: dict = {}
        for chunk in s.split("+"):
            if not chunk:
                raise PolynomialSyntaxError(f"empty term in {text!r}")
            coeff = 1
            exps = [0] * len(variables)
            for factor in chunk.split("*"):
                if not factor:
                    raise PolynomialSyntaxError(f"empty factor in {text!r}")
                if _INT_RE.match(factor):
                    coeff *= int(factor)
                    continue
                m = _POWER_RE.match(factor)
                if not m:
                    raise PolynomialSyntaxError(f"bad factor {factor!r} in {text!r}")
                name, exp = m.group(1), m.group(2)
                if name not in index:
                    raise PolynomialSyntaxError(f"unknown variable {name!r} in {text!r}")
                exps[index[name]] += int(exp) if exp is not None else 1
            mon = tuple(exps)
            terms[mon] = terms.get(mon, 0) + coeff
        return cls(field, variables, terms)

    def _check_compatible(self, other: "Polynomial"):
        if self.field != other.field or self.variables != other.variables:
            raise StructureError("polynomials over different rings")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for mon, c in other.terms.items():
            terms[mon] = terms.get(mon, 0) + c
        return Polynomial(self.field, self.variables, terms)

    def __neg__(self):
        return Polynomial(self.field, self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.field, self.variables, {m: c * other for m, c in self.terms.items()})
        self._check_compatible(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = mon_mul(m1, m2)
                terms[mon] = terms.get(mon, 0) + c1 * c2
        return Polynomial(self.field, self.variables, terms)

    __rmul__ = __mul__

    def term_mul(self, coeff: int, mon: Monomial) -> "Polynomial":
        return Polynomial(
            self.field, self.variables, {mon_mul(m, mon): c * coeff for m, c in self.terms.items()}
        )

    def leading(self, order: MonomialOrder):
        """(monomial, coefficient) of the leading term, or None for the zero polynomial."""
        if not self.terms:
            return None
        mon = max(self.terms, key=order.key)
        return mon, self.terms[mon]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        lead = self.leading(order)
        if lead is None:
            return self
        return self * self.field.inv(lead[1])

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.variables, frozenset(self.terms.items())))

    def to_text(self, order: MonomialOrder = DEGREVLEX) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mon in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[mon]
            factors = [f"{v}^{e}" if e > 1 else v for v, e in zip(self.variables, mon) if e]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(c)] + factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def _check_family(polys):
    polys = list(polys)
    if not polys:
        raise StructureError("empty polynomial sequence")
    first = polys[0]
    for q in polys[1:]:
        first._check_compatible(q)
    return polys


def reduce(f: Polynomial, basis, order: MonomialOrder):
    """Divide f by the basis.

    Returns (remainder, quotients) with  f == sum(q_i * g_i) + remainder  and
    no remainder term divisible by a leading monomial of the basis.  The
    reducer is chosen deterministically (first match in basis order).
    """
    basis = _check_family([f] + list(basis))[1:]
    if not basis:
        raise StructureError("empty reduction basis")
    leads = [g.leading(order) for g in basis]
    work = f
    remainder = Polynomial.zero(f.field, f.variables)
    quotients = [Polynomial.zero(f.field, f.variables) for _ in basis]
    p = f.field.p
    while not work.is_zero():
        mon, coeff = work.leading(order)
        for i, lead in enumerate(leads):
            if lead is not None and mon_divides(lead[0], mon):
                factor_c = (coeff * f.field.inv(lead[1])) % p
                factor_m = mon_div(mon, lead[0])
                quotients[i] += Polynomial(f.field, f.variables, {factor_m: factor_c})
                work -= basis[i].term_mul(factor_c, factor_m)
                break
        else:
            t = Polynomial(f.field, f.variables, {mon: coeff})
            remainder += t
            work -= t
    return remainder, quotients


def normal_form(f: Polynomial, basis, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Remainder of f on division by the basis."""
    return reduce(f, basis, order)[0]


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    f._check_compatible(g)
    mf, cf = f.leading(order)
    mg, cg = g.leading(order)
    lcm = mon_lcm(mf, mg)
    left = f.term_mul(f.field.inv(cf), mon_div(lcm, mf))
    right = g.term_mul(g.field.inv(cg), mon_div(lcm, mg))
    return left - right


def buchberger(gens, order: MonomialOrder = DEGREVLEX):
    """Reduced Groebner basis of the ideal generated by gens.

    Pair selection is by (degree of the lcm, pair index), which makes the
    run, and hence the output order, deterministic.  No pair-elimination
    criteria are applied; inputs here are tiny.
    """
    gens = _check_family(gens)
    basis = [g.monic(order) for g in gens if not g.is_zero()]
    if not basis:
        return []
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        def lcm_deg(pair):
            mi = basis[pair[0]].leading(order)[0]
            mj = basis[pair[1]].leading(order)[0]
            return mon_degree(mon_lcm(mi, mj))

        i, j = min(pairs, key=lambda pr: (lcm_deg(pr), pr))
        pairs.remove((i, j))
        rem = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if not rem.is_zero():
            basis.append(rem.monic(order))
            k = len(basis) - 1
            pairs.update((i2, k) for i2 in range(k))
    return _interreduce(basis, order)


def _interreduce(basis, order):
    """Minimalize and autoreduce a Groebner basis; result is the reduced basis."""
    by_lead = sorted(basis, key=lambda g: order.key(g.leading(order)[0]))
    minimal = []
    for g in by_lead:
        lm = g.leading(order)[0]
        if not any(mon_divides(h.leading(order)[0], lm) for h in minimal):
            minimal.append(g)
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            others = minimal[:i] + minimal[i + 1 :]
            if not others:
                continue
            rem = normal_form(minimal[i], others, order).monic(order)
            if rem != minimal[i]:
                minimal[i] = rem
                changed = True
    return sorted(minimal, key=lambda g: order.key(g.leading(order)[0]))


def is_groebner(basis, order: MonomialOrder = DEGREVLEX) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    basis = [g for g in _check_family(basis) if not g.is_zero()]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero():
                return False
    return True


def standard_monomials(basis, order: MonomialOrder = DEGREVLEX):
    """Monomials divisible by no leading monomial of a zero-dimensional Groebner basis.

    These form an F_p-basis of the quotient by the ideal.  Raises if the
    input fails the S-polynomial check or if some variable has no pure power
    among the leading monomials (the quotient is then infinite-dimensional).
    """
    basis = [g for g in _check_family(basis) if not g.is_zero()] if basis else []
    if not basis:
        raise StructureError("empty generating set")
    if not is_groebner(basis, order):
        raise StructureError("input is not a Groebner basis")
    nvars = len(basis[0].variables)
    leads = [g.leading(order)[0] for g in basis]
    if any(mon_degree(lm) == 0 for lm in leads):
        return []  # unit ideal, zero quotient
    bounds = []
    for i in range(nvars):
        pure = [lm[i] for lm in leads if lm[i] > 0 and mon_degree(lm) == lm[i]]
        if not pure:
            raise NotZeroDimensionalError(
                f"not zero-dimensional: no pure power of {basis[0].variables[i]} "
                "among the leading monomials"
            )
        bounds.append(min(pure))
    mons = []
    for exps in itertools.product(*(range(b) for b in bounds)):
        if not any(mon_divides(lm, exps) for lm in leads):
            mons.append(tuple(exps))
    return sorted(mons, key=display_key)
