"""Products of a coefficient semigroup over an index-map system.

The product of H over a system S lives on pairs (x, a) where a is a base
element and x : I[a] -> H is a tuple. Multiplication routes coordinates
through the index maps and multiplies pointwise in H:

    (x, a) * (y, b) = ((x o lam[a,b]) . (y o rho[a,b]), ab)

When the system satisfies the composition axioms this is associative for
every H; when an axiom fails there is a finite H and a concrete triple
witnessing non-associativity, and this module constructs it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    EmptyFiberError,
    NotIdempotentError,
    SizeCapError,
)
from .semigroup import FiniteSemigroup, Homomorphism
from .system import AxiomViolation, LrSystem

DEFAULT_UNIVERSE_CAP = 10**6


@dataclass(frozen=True)
class ProductElement:
    """Pair of an anchor base element and a tuple over its index set."""

    anchor: int
    values: tuple[int, ...]

    def label(self) -> str:
        return f"{self.anchor}:" + "".join(str(v) for v in self.values)


def universe_size(h: FiniteSemigroup, system: LrSystem) -> int:
    return sum(h.size ** k for k in system.index_sizes)


def universe(
    h: FiniteSemigroup, system: LrSystem, cap: int = DEFAULT_UNIVERSE_CAP
) -> list[ProductElement]:
    """All product elements: anchors ascending, tuples lexicographic
    (leftmost index most significant). An empty index set contributes a
    single element with the empty tuple.
    """
    total = universe_size(h, system)
    if total > cap:
        raise SizeCapError(f"universe has {total} elements, cap is {cap}")
    out = []
    for a in system.base.elements():
        for values in itertools.product(
            range(h.size), repeat=system.index_sizes[a]
        ):
            out.append(ProductElement(a, values))
    return out


def multiply(
    h: FiniteSemigroup, system: LrSystem, p: ProductElement, q: ProductElement
) -> ProductElement:
    """One product step; works for any shape-valid system."""
    a, b = p.anchor, q.anchor
    ab = system.base.mul(a, b)
    lam = system.lam_map(a, b)
    rho = system.rho_map(a, b)
    values = tuple(
        h.mul(p.values[lam[i]], q.values[rho[i]])
        for i in range(system.index_sizes[ab])
    )
    return ProductElement(ab, values)


def product_table(
    h: FiniteSemigroup, system: LrSystem, cap: int = DEFAULT_UNIVERSE_CAP
) -> FiniteSemigroup:
    """The full multiplication table over the documented element order.

    Element names are generated as "anchor:digits". For an axiom-valid
    system the result is a semigroup (re-validation is part of the test
    suite, not of this constructor).
    """
    elems = universe(h, system, cap=cap)
    index = {e: i for i, e in enumerate(elems)}
    table = tuple(
        tuple(index[multiply(h, system, p, q)] for q in elems) for p in elems
    )
    names = tuple(e.label() for e in elems)
    return FiniteSemigroup(len(elems), table, names)


@dataclass(frozen=True)
class AssociativityReport:
    """Outcome of the exhaustive scan, with the first failing triple."""

    associative: bool
    witness: tuple[ProductElement, ProductElement, ProductElement] | None = None

    def __bool__(self):
        return self.associative


def associativity_oracle(
    h: FiniteSemigroup, system: LrSystem, cap: int = DEFAULT_UNIVERSE_CAP
) -> AssociativityReport:
    """Exhaustively test (p*q)*r == p*(q*r) over the whole universe.

    The system only needs to be shape-valid; this is the independent
    ground truth the axiom checker is measured against. Returns the first
    failing triple in enumeration order, if any.
    """
    elems = universe(h, system, cap=cap)
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    table = [
        [index[multiply(h, system, p, q)] for q in elems] for p in elems
    ]
    for i in range(n):
        row_i = table[i]
        for j in range(n):
            ij = row_i[j]
            row_ij = table[ij]
            row_j = table[j]
            for k in range(n):
                if row_ij[k] != row_i[row_j[k]]:
                    return AssociativityReport(
                        False, (elems[i], elems[j], elems[k])
                    )
    return AssociativityReport(True)


def _letters_with_identity(system: LrSystem, zero_kind: str) -> FiniteSemigroup:
    """Left- or right-zero semigroup on the disjoint union of all index
    sets, with a fresh identity adjoined at index 0."""
    letters = [
        (s, i)
        for s in system.base.elements()
        for i in range(system.index_sizes[s])
    ]
    m = len(letters) + 1
    table = []
    for i in range(m):
        row = []
        for j in range(m):
            if i == 0:
                row.append(j)
            elif j == 0:
                row.append(i)
            else:
                row.append(i if zero_kind == "left" else j)
        table.append(tuple(row))
    names = ("e",) + tuple(f"{s}.{i}" for (s, i) in letters)
    return FiniteSemigroup(m, tuple(table), names)


def _letter_index(system: LrSystem, s: int, i: int) -> int:
    # identity occupies index 0; letters follow in (element, point) order
    offset = 1
    for t in range(s):
        offset += system.index_sizes[t]
    return offset + i


def nonassociativity_witness(system: LrSystem, violation: AxiomViolation):
    """A finite coefficient semigroup and triple that fail associativity.

    Given a shape-valid system with a confirmed axiom violation at
    (a,b,c), returns (H, (p,q,r)) such that (p*q)*r != p*(q*r) in the
    product of H over the system. H is the left-zero semigroup on the
    disjoint union of the index sets with an identity adjoined (right-zero
    for a beta violation); the triple places the tagged-identity tuple on
    the coordinate whose maps disagree and constant-identity tuples on the
    other two. Every coordinate product then has at most one non-identity
    factor, so the disagreeing letters survive verbatim.
    """
    a, b, c = violation.a, violation.b, violation.c
    kind = "right" if violation.axiom == "beta" else "left"
    h = _letters_with_identity(system, kind)

    def tagged(s):
        return ProductElement(
            s, tuple(_letter_index(system, s, i) for i in range(system.index_sizes[s]))
        )

    def constant_identity(s):
        return ProductElement(s, (0,) * system.index_sizes[s])

    if violation.axiom == "alpha":
        triple = (tagged(a), constant_identity(b), constant_identity(c))
    elif violation.axiom == "beta":
        triple = (constant_identity(a), constant_identity(b), tagged(c))
    else:
        triple = (constant_identity(a), tagged(b), constant_identity(c))
    return h, triple


def triple_associates(
    h: FiniteSemigroup, system: LrSystem, triple
) -> bool:
    """Direct two-sided evaluation of one triple."""
    p, q, r = triple
    left = multiply(h, system, multiply(h, system, p, q), r)
    right = multiply(h, system, p, multiply(h, system, q, r))
    return left == right


def embed_base(
    h: FiniteSemigroup,
    system: LrSystem,
    idempotent: int,
    cap: int = DEFAULT_UNIVERSE_CAP,
) -> Homomorphism:
    """Embed the base semigroup as constant tuples at one idempotent of H."""
    if h.mul(idempotent, idempotent) != idempotent:
        raise NotIdempotentError(f"{idempotent} is not idempotent in H")
    target = product_table(h, system, cap=cap)
    elems = universe(h, system, cap=cap)
    index = {e: i for i, e in enumerate(elems)}
    mapping = tuple(
        index[ProductElement(a, (idempotent,) * system.index_sizes[a])]
        for a in system.base.elements()
    )
    return Homomorphism(system.base, target, mapping)


def embed_fiber(
    h: FiniteSemigroup,
    system: LrSystem,
    base_idempotent: int,
    cap: int = DEFAULT_UNIVERSE_CAP,
) -> Homomorphism:
    """Embed H as constant tuples anchored at an idempotent base element
    with a nonempty index set."""
    f = base_idempotent
    if system.base.mul(f, f) != f:
        raise NotIdempotentError(f"{f} is not idempotent in the base")
    if system.index_sizes[f] == 0:
        raise EmptyFiberError(f"base element {f} has an empty index set")
    target = product_table(h, system, cap=cap)
    elems = universe(h, system, cap=cap)
    index = {e: i for i, e in enumerate(elems)}
    mapping = tuple(
        index[ProductElement(f, (x,) * system.index_sizes[f])]
        for x in h.elements()
    )
    return Homomorphism(h, target, mapping)


def subset_multiply(
    op: FiniteSemigroup,
    system: LrSystem,
    p: tuple[frozenset, int],
    q: tuple[frozenset, int],
) -> tuple[frozenset, int]:
    """Subset form of the product for a two-element coefficient semigroup.

    Tuples over {0,1} are identified with subsets of the index set; the
    product pulls both subsets back along the index maps and combines the
    two preimages pointwise with ``op``:

        (U, a) * (W, b) = (lam[a,b]^{-1}(U) . rho[a,b]^{-1}(W), ab)
    """
    if op.size != 2:
        raise ValueError("subset form needs a two-element coefficient semigroup")
    (u, a), (w, b) = p, q
    ab = system.base.mul(a, b)
    lam = system.lam_map(a, b)
    rho = system.rho_map(a, b)
    out = frozenset(
        i
        for i in range(system.index_sizes[ab])
        if op.mul(1 if lam[i] in u else 0, 1 if rho[i] in w else 0) == 1
    )
    return (out, ab)


def element_as_subset(p: ProductElement) -> tuple[frozenset, int]:
    return (frozenset(i for i, v in enumerate(p.values) if v == 1), p.anchor)
