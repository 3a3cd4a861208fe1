"""Exact ideal calculus in finite-dimensional commutative algebras over F_p.

An algebra is given by a monomial basis and a multiplication table; ideals are
subspaces in reduced row echelon form that are closed under multiplication, so
ideal equality is matrix equality.  In the local artinian algebras built here
every non-unit is a zerodivisor, hence traces are computed from the Hom-image
definition rather than from a colon formula (whose non-zerodivisor hypothesis
would fail for proper ideals).
"""

from __future__ import annotations

import itertools

from . import linalg
from .errors import (
    EnumerationCapExceededError,
    NotLocalError,
    NotZeroDimensionalError,
    SearchBudgetExceededError,
    StructureError,
)
from .polyfp import (
    DEGREVLEX,
    Polynomial,
    PrimeField,
    buchberger,
    display_key,
    standard_monomials,
)

DEFAULT_HOM_CAP_EXPONENT = 22  # isomorphism search allows at most 2**22 candidate maps


class IdealSubspace:
    """An ideal of a FinAlgebra as a canonical (rref) coefficient matrix."""

    __slots__ = ("p", "ncols", "matrix", "pivots")

    def __init__(self, p, ncols, rows):
        self.p = p
        self.ncols = ncols
        self.matrix, self.pivots = linalg.rref(rows, p)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def contains_vector(self, vec) -> bool:
        return linalg.in_rowspace(self.matrix, self.pivots, vec, self.p)

    def is_subspace_of(self, other: "IdealSubspace") -> bool:
        return all(other.contains_vector(row) for row in self.matrix)

    def coordinates(self, vec):
        return linalg.coordinates(self.matrix, self.pivots, vec, self.p)

    def __eq__(self, other):
        return (
            isinstance(other, IdealSubspace)
            and self.p == other.p
            and self.ncols == other.ncols
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.p, self.ncols, self.matrix))

    def __repr__(self):
        return f"IdealSubspace(dim={self.dim}, rows={self.matrix!r})"


class HomBasis:
    """F_p-basis of Hom(I, J) over the algebra.

    Each map is stored as a (dim I) x (dim J) matrix of coordinates: row a
    holds the image of the a-th basis row of I written in the basis of J.
    """

    __slots__ = ("domain", "codomain", "maps")

    def __init__(self, domain, codomain, maps):
        self.domain = domain
        self.codomain = codomain
        self.maps = tuple(tuple(tuple(r) for r in m) for m in maps)

    @property
    def dim(self) -> int:
        return len(self.maps)

    def image_vector(self, matrix, row_index, p):
        """Image of the row_index-th basis row of the domain, as an algebra vector."""
        out = [0] * self.codomain.ncols
        for b, w in enumerate(self.codomain.matrix):
            c = matrix[row_index][b]
            if c:
                for k, x in enumerate(w):
                    out[k] = (out[k] + c * x) % p
        return tuple(out)


class FinAlgebra:
    """Finite-dimensional commutative F_p-algebra with a fixed basis.

    The constructor checks commutativity, associativity on all basis triples,
    and that the given unit acts as the identity.  Locality (nilpotence of the
    span of the non-constant basis monomials) is certified by
    algebra_from_presentation; products of local algebras carry their factor
    list instead of a maximal ideal.
    """

    __slots__ = (
        "field",
        "dim",
        "basis_labels",
        "table",
        "unit",
        "label",
        "maximal_ideal",
        "factors",
        "_presentation",
    )

    def __init__(self, field, basis_labels, table, unit, label=None, factors=None):
        self.field = field
        self.basis_labels = tuple(basis_labels)
        self.dim = len(self.basis_labels)
        d, p = self.dim, field.p
        self.table = tuple(
            tuple(tuple(x % p for x in table[i][j]) for j in range(d)) for i in range(d)
        )
        self.unit = tuple(x % p for x in unit)
        self.label = label or f"F_{p}^{d}-algebra"
        self.maximal_ideal = None
        self.factors = tuple(factors) if factors else None
        self._presentation = None
        self._validate()

    def _validate(self):
        d = self.dim
        for i in range(d):
            for j in range(i, d):
                if self.table[i][j] != self.table[j][i]:
                    raise StructureError("multiplication table is not commutative")
        for i in range(d):
            e_i = self.basis_vector(i)
            if self.mul(self.unit, e_i) != e_i:
                raise StructureError("unit does not act as the identity")
        for i in range(d):
            for j in range(d):
                ij = self.table[i][j]
                for k in range(d):
                    left = self.mul(ij, self.basis_vector(k))
                    right = self.mul(self.basis_vector(i), self.table[j][k])
                    if left != right:
                        raise StructureError("multiplication table is not associative")

    # -- elements ----------------------------------------------------------

    def basis_vector(self, i):
        return tuple(1 if j == i else 0 for j in range(self.dim))

    def zero_vector(self):
        return (0,) * self.dim

    def mul(self, u, v):
        p, d = self.field.p, self.dim
        out = [0] * d
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                c = ui * vj
                row = self.table[i][j]
                for k in range(d):
                    out[k] += c * row[k]
        return tuple(x % p for x in out)

    def all_elements(self):
        """Every element of the algebra, in lexicographic coordinate order."""
        return (tuple(v) for v in itertools.product(range(self.field.p), repeat=self.dim))

    def element(self, text: str):
        """Coordinate vector of a polynomial expression in the presentation variables."""
        if self._presentation is None:
            raise StructureError("algebra has no polynomial presentation")
        variables, groebner, order, _ = self._presentation
        poly = Polynomial.parse(self.field, variables, text)
        if groebner:
            poly = _normal_form(poly, groebner, order)
        return self._vector_of(poly)

    def _vector_of(self, poly):
        index = {m: k for k, m in enumerate(self._presentation[3])}
        vec = [0] * self.dim
        for mon, c in poly.terms.items():
            if mon not in index:
                raise StructureError("polynomial does not reduce into the basis")
            vec[index[mon]] = c
        return tuple(vec)

    def format_element(self, vec) -> str:
        parts = []
        for i in range(self.dim):
            c = vec[i] % self.field.p
            if not c:
                continue
            lab = self.basis_labels[i]
            if lab == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(lab)
            else:
                parts.append(f"{c}*{lab}")
        return " + ".join(parts) if parts else "0"

    def format_ideal(self, ideal: IdealSubspace) -> str:
        if ideal.dim == 0:
            return "0"
        return ", ".join(self.format_element(row) for row in ideal.matrix)

    # -- ideals ------------------------------------------------------------

    def zero_ideal(self) -> IdealSubspace:
        return IdealSubspace(self.field.p, self.dim, ())

    def unit_ideal(self) -> IdealSubspace:
        return IdealSubspace(self.field.p, self.dim, tuple(self.basis_vector(i) for i in range(self.dim)))

    def ideal_generate(self, gens) -> IdealSubspace:
        """Smallest ideal containing the given coordinate vectors."""
        rows = [tuple(g) for g in gens]
        for g in list(rows):
            for i in range(self.dim):
                rows.append(self.mul(self.basis_vector(i), g))
        return IdealSubspace(self.field.p, self.dim, rows)

    def principal_ideal(self, x) -> IdealSubspace:
        return self.ideal_generate([x])

    def is_ideal(self, sub: IdealSubspace) -> bool:
        for i in range(self.dim):
            e_i = self.basis_vector(i)
            for row in sub.matrix:
                if not sub.contains_vector(self.mul(e_i, row)):
                    return False
        return True

    def ideal_product(self, left: IdealSubspace, right: IdealSubspace) -> IdealSubspace:
        rows = [self.mul(u, v) for u in left.matrix for v in right.matrix]
        return IdealSubspace(self.field.p, self.dim, rows)

    def annihilator(self, ideal: IdealSubspace) -> IdealSubspace:
        """{r : r * ideal = 0}, as the left kernel of the stacked action maps."""
        stacked = [
            tuple(
                itertools.chain.from_iterable(
                    self.mul(self.basis_vector(i), v) for v in ideal.matrix
                )
            )
            for i in range(self.dim)
        ]
        return IdealSubspace(self.field.p, self.dim, linalg.left_kernel(stacked, self.dim, self.field.p))

    def colon_in_ring(self, left: IdealSubspace, right: IdealSubspace) -> IdealSubspace:
        """{r : r * right is contained in left}."""
        p = self.field.p
        stacked = []
        for i in range(self.dim):
            e_i = self.basis_vector(i)
            residuals = [
                linalg.reduce_vector(left.matrix, left.pivots, self.mul(e_i, w), p)
                for w in right.matrix
            ]
            stacked.append(tuple(itertools.chain.from_iterable(residuals)))
        return IdealSubspace(p, self.dim, linalg.left_kernel(stacked, self.dim, p))

    # -- homomorphisms and traces -------------------------------------------

    def hom_module(self, domain: IdealSubspace, codomain: IdealSubspace) -> HomBasis:
        """Basis of the module of algebra-linear maps domain -> codomain.

        A map is determined by the images of the basis rows of the domain; the
        linearity constraints f(r*v) = r*f(v) for every basis element r cut out
        a linear subspace of the (dim I)x(dim J) coordinate matrices.
        """
        p = self.field.p
        s, t = domain.dim, codomain.dim
        if s == 0 or t == 0:
            return HomBasis(domain, codomain, ())
        constraints = []
        for i in range(self.dim):
            e_i = self.basis_vector(i)
            lam = [domain.coordinates(self.mul(e_i, v)) for v in domain.matrix]
            mu = [codomain.coordinates(self.mul(e_i, w)) for w in codomain.matrix]
            for a in range(s):
                for bp in range(t):
                    row = [0] * (s * t)
                    for c in range(s):
                        row[c * t + bp] = (row[c * t + bp] + lam[a][c]) % p
                    for b in range(t):
                        row[a * t + b] = (row[a * t + b] - mu[b][bp]) % p
                    constraints.append(tuple(row))
        kernel = linalg.right_kernel(constraints, s * t, p)
        maps = [tuple(tuple(vec[a * t + b] for b in range(t)) for a in range(s)) for vec in kernel]
        return HomBasis(domain, codomain, maps)

    def trace_ideal(self, ideal: IdealSubspace) -> IdealSubspace:
        """Ideal generated by all values f(v), f ranging over Hom(ideal, R)."""
        hom = self.hom_module(ideal, self.unit_ideal())
        p = self.field.p
        rows = [
            hom.image_vector(m, a, p)
            for m in hom.maps
            for a in range(ideal.dim)
        ]
        return IdealSubspace(p, self.dim, rows)

    def trace_principal_via_ann(self, x) -> IdealSubspace:
        """Double annihilator ann(ann((x))); independent oracle for principal traces."""
        return self.annihilator(self.annihilator(self.principal_ideal(x)))

    def is_isomorphic(
        self, left: IdealSubspace, right: IdealSubspace, hom_cap_exponent: int = DEFAULT_HOM_CAP_EXPONENT
    ) -> bool:
        """Exhaustive search of Hom(left, right) for a bijective map.

        Raises SearchBudgetExceededError when the Hom space holds more than
        2**hom_cap_exponent maps; the instance is then beyond desk scale and
        no answer is guessed.
        """
        if left.dim != right.dim:
            return False
        if left.dim == 0:
            return True
        if left == right:
            return True
        hom = self.hom_module(left, right)
        h = hom.dim
        if h == 0:
            return False
        p = self.field.p
        if p**h > 2**hom_cap_exponent:
            raise SearchBudgetExceededError(
                f"Hom space has {p}^{h} elements, beyond the 2^{hom_cap_exponent} budget"
            )
        s = left.dim
        for coeffs in itertools.product(range(p), repeat=h):
            if not any(coeffs):
                continue
            combo = [[0] * s for _ in range(s)]
            for c, mat in zip(coeffs, hom.maps):
                if not c:
                    continue
                for a in range(s):
                    row = mat[a]
                    for b in range(s):
                        combo[a][b] = (combo[a][b] + c * row[b]) % p
            if linalg.is_invertible(combo, p):
                return True
        return False

    # -- structure ----------------------------------------------------------

    @property
    def is_local(self) -> bool:
        return self.maximal_ideal is not None and self.factors is None

    def local_factors(self):
        if self.is_local:
            return (self,)
        if self.factors:
            return self.factors
        raise StructureError("algebra carries neither a locality nor a product certificate")

    def block_offsets(self):
        offsets = []
        off = 0
        for f in self.local_factors():
            offsets.append(off)
            off += f.dim
        return tuple(offsets)

    def is_gorenstein(self) -> bool:
        """Socle criterion: the annihilator of the maximal ideal is 1-dimensional."""
        if self.is_local:
            return self.annihilator(self.maximal_ideal).dim == 1
        return all(f.is_gorenstein() for f in self.local_factors())

    def enumerate_ideals(self, cap_dim=None):
        """All multiplicatively closed subspaces, canonically ordered by dimension.

        For products of local algebras the enumeration runs blockwise (every
        ideal of a product is a product of ideals).
        """
        if self.factors is not None:
            parts = [f.enumerate_ideals(cap_dim) for f in self.factors]
            return [
                self.product_ideal(combo) for combo in itertools.product(*parts)
            ]
        cap = cap_dim if cap_dim is not None else (6 if self.field.p == 2 else 4)
        if self.dim > cap:
            raise EnumerationCapExceededError(
                f"dimension {self.dim} exceeds the enumeration cap {cap}"
            )
        p, d = self.field.p, self.dim
        found = []
        for k in range(d + 1):
            for pivots in itertools.combinations(range(d), k):
                free = [
                    (r, c)
                    for r in range(k)
                    for c in range(pivots[r] + 1, d)
                    if c not in pivots
                ]
                for values in itertools.product(range(p), repeat=len(free)):
                    rows = [[0] * d for _ in range(k)]
                    for r in range(k):
                        rows[r][pivots[r]] = 1
                    for (r, c), val in zip(free, values):
                        rows[r][c] = val
                    sub = IdealSubspace(p, d, rows)
                    if self.is_ideal(sub):
                        found.append(sub)
        return found

    # -- products ------------------------------------------------------------

    def product_ideal(self, components) -> IdealSubspace:
        """Embed one ideal per local factor as an ideal of the product algebra."""
        factors = self.local_factors()
        components = tuple(components)
        if len(components) != len(factors):
            raise StructureError("one ideal component per factor is required")
        rows = []
        off = 0
        for f, ideal in zip(factors, components):
            if ideal.ncols != f.dim:
                raise StructureError("ideal component does not match its factor")
            for row in ideal.matrix:
                rows.append((0,) * off + tuple(row) + (0,) * (self.dim - off - f.dim))
            off += f.dim
        return IdealSubspace(self.field.p, self.dim, rows)

    def factor_ideals(self, ideal: IdealSubspace):
        """Blockwise components of an ideal of a product algebra."""
        out = []
        off = 0
        for f in self.local_factors():
            rows = [row[off : off + f.dim] for row in ideal.matrix]
            out.append(IdealSubspace(self.field.p, f.dim, rows))
            off += f.dim
        return tuple(out)


def _normal_form(poly, groebner, order):
    from .polyfp import normal_form

    return normal_form(poly, groebner, order)


def algebra_from_presentation(p, variables, relations, order=DEGREVLEX, label=None) -> FinAlgebra:
    """Quotient of F_p[variables] by the relations, certified local.

    The basis is the set of standard monomials of a Groebner basis of the
    relations; the multiplication table stores the normal forms of basis
    products.  Raises NotZeroDimensionalError when the quotient is infinite
    dimensional and NotLocalError when the span of the non-constant standard
    monomials is not a nilpotent ideal (the quotient is then not local with
    residue field F_p).
    """
    field = PrimeField(p)
    variables = tuple(variables)
    if len(set(variables)) != len(variables):
        raise StructureError("duplicate variable names")
    polys = [
        r if isinstance(r, Polynomial) else Polynomial.parse(field, variables, r)
        for r in relations
    ]
    groebner = buchberger(polys, order) if polys else []
    if label is None:
        rel_text = ", ".join(q.to_text(order) for q in polys)
        ring = f"F_{p}" + (f"[{','.join(variables)}]" if variables else "")
        label = f"{ring}/({rel_text})" if rel_text else ring
    if not groebner:
        if variables:
            raise NotZeroDimensionalError("no relations: the quotient is a polynomial ring")
        mons = [()]
    else:
        mons = standard_monomials(groebner, order)
        if not mons:
            raise NotLocalError("relations generate the unit ideal: the quotient is the zero ring")
    mons = sorted(mons, key=display_key)
    index = {m: k for k, m in enumerate(mons)}
    d = len(mons)

    def nf_vector(poly):
        reduced = _normal_form(poly, groebner, order) if groebner else poly
        vec = [0] * d
        for mon, c in reduced.terms.items():
            vec[index[mon]] = c
        return tuple(vec)

    table = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            prod = Polynomial(field, variables, {tuple(a + b for a, b in zip(mons[i], mons[j])): 1})
            vec = nf_vector(prod)
            table[i][j] = vec
            table[j][i] = vec

    labels = [
        Polynomial(field, variables, {m: 1}).to_text(order) if sum(m) else "1" for m in mons
    ]
    unit = tuple(1 if k == index[(0,) * len(variables)] else 0 for k in range(d))
    algebra = FinAlgebra(field, labels, table, unit, label=label)
    algebra._presentation = (variables, groebner, order, mons)

    non_constant = [algebra.basis_vector(k) for k, m in enumerate(mons) if sum(m)]
    candidate = algebra.ideal_generate(non_constant)
    if candidate.dim != d - 1:
        raise NotLocalError("non-constant monomials do not span a proper ideal")
    power = candidate
    while power.dim > 0:
        nxt = algebra.ideal_product(power, candidate)
        if nxt == power:
            raise NotLocalError("maximal ideal candidate is not nilpotent")
        power = nxt
    algebra.maximal_ideal = candidate
    return algebra


def product_algebra(left: FinAlgebra, right: FinAlgebra) -> FinAlgebra:
    """Block-diagonal product of two algebras over the same prime field.

    The result is not local; it carries the flattened list of local factors,
    and Gorenstein tests and ideal enumeration operate blockwise.
    """
    if left.field != right.field:
        raise StructureError("product factors live over different fields")
    factors = tuple(left.local_factors()) + tuple(right.local_factors())
    d = sum(f.dim for f in factors)
    labels = []
    for k, f in enumerate(factors):
        labels.extend(f"{lab}@{k}" for lab in f.basis_labels)
    zero = (0,) * d
    table = [[zero] * d for _ in range(d)]
    unit = [0] * d
    off = 0
    for f in factors:
        for i in range(f.dim):
            for j in range(f.dim):
                vec = [0] * d
                for k, x in enumerate(f.table[i][j]):
                    vec[off + k] = x
                table[off + i][off + j] = tuple(vec)
        for k, x in enumerate(f.unit):
            unit[off + k] = x
        off += f.dim
    return FinAlgebra(
        left.field,
        labels,
        table,
        unit,
        label=f"{left.label} x {right.label}",
        factors=factors,
    )
