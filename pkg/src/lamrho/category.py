"""Arrows between index-map systems.

Two kinds of arrows live here. Same-base morphisms carry one index map
per base element. General transformations pair a backwards base
homomorphism h : T -> S with a family t[a] : I[h(a)] -> J[a]; both
squares

    lamJ[a,b] o t[ab] = t[a] o lamI[h(a),h(b)]
    rhoJ[a,b] o t[ab] = t[b] o rhoI[h(a),h(b)]

must commute. Every transformation induces a homomorphism of products in
the opposite direction, (x, a) |-> (x o t[a], h(a)).

Free systems over a bounded word length are also built here, together
with the canonical transformation from any concrete system into the free
system over its own element alphabet, whose induced homomorphism is onto.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

from .errors import (
    ComposeMismatchError,
    MapRangeError,
    SizeCapError,
    SquareViolationError,
)
from .product import DEFAULT_UNIVERSE_CAP, ProductElement, product_table, universe
from .semigroup import FiniteSemigroup, Homomorphism, subsemigroup_table
from .system import LrSystem, validate_axioms


# ---------------------------------------------------------------------------
# Same-base morphisms


@dataclass(frozen=True)
class SystemMorphism:
    """A family t[a] : I[a] -> I'[a] between systems over one base."""

    source: LrSystem
    target: LrSystem
    maps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.source.base != self.target.base:
            raise ComposeMismatchError("morphism needs a common base semigroup")
        n = self.source.base.size
        if len(self.maps) != n:
            raise MapRangeError("need one map per base element")
        for a in range(n):
            if len(self.maps[a]) != self.source.index_sizes[a]:
                raise MapRangeError(f"map at {a} has the wrong length")
            if any(
                not 0 <= v < self.target.index_sizes[a] for v in self.maps[a]
            ):
                raise MapRangeError(f"map at {a} has out-of-range values")

    def as_transformation(self) -> "Transformation":
        return Transformation(
            self.source,
            self.target,
            Homomorphism.identity(self.source.base),
            self.maps,
        )


# ---------------------------------------------------------------------------
# General transformations


@dataclass(frozen=True)
class Transformation:
    """Arrow from (source.base, source) to (target.base, target).

    ``h`` runs backwards, from the target base to the source base, and
    ``maps[a]`` sends I_source[h(a)] into I_target[a]. Shape is checked
    here; the commuting squares are the job of validate_transformation.
    """

    source: LrSystem
    target: LrSystem
    h: Homomorphism
    maps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.h.domain != self.target.base or self.h.codomain != self.source.base:
            raise ComposeMismatchError(
                "h must map the target base into the source base"
            )
        n = self.target.base.size
        if len(self.maps) != n:
            raise MapRangeError("need one map per target base element")
        for a in range(n):
            expected = self.source.index_sizes[self.h(a)]
            if len(self.maps[a]) != expected:
                raise MapRangeError(
                    f"map at {a} has length {len(self.maps[a])}, expected {expected}"
                )
            if any(
                not 0 <= v < self.target.index_sizes[a] for v in self.maps[a]
            ):
                raise MapRangeError(f"map at {a} has out-of-range values")


def identity_transformation(system: LrSystem) -> Transformation:
    maps = tuple(tuple(range(k)) for k in system.index_sizes)
    return Transformation(
        system, system, Homomorphism.identity(system.base), maps
    )


def validate_transformation(tr):
    """Check both commuting squares at every pair and index point.

    Accepts general transformations and canonical arrows into truncated
    free systems; for the latter, pairs whose concatenation escapes the
    length bound are outside the quantification domain. Raises
    SquareViolationError on the first failure, returns the arrow
    otherwise.
    """
    if isinstance(tr, FreeTransformation):
        report = tr.square_report()
        if not report.ok:
            kind, w, u, p = report.violations[0]
            raise SquareViolationError(
                f"{kind} square fails at words ({w},{u}), point {p}",
                kind=kind,
                a=w,
                b=u,
                point=p,
            )
        return tr
    src, tgt, h = tr.source, tr.target, tr.h
    for a in tgt.base.elements():
        for b in tgt.base.elements():
            ab = tgt.base.mul(a, b)
            ha, hb = h(a), h(b)
            lam_src = src.lam_map(ha, hb)
            rho_src = src.rho_map(ha, hb)
            lam_tgt = tgt.lam_map(a, b)
            rho_tgt = tgt.rho_map(a, b)
            t_ab, t_a, t_b = tr.maps[ab], tr.maps[a], tr.maps[b]
            for p in range(src.index_sizes[src.base.mul(ha, hb)]):
                if lam_tgt[t_ab[p]] != t_a[lam_src[p]]:
                    raise SquareViolationError(
                        f"lambda square fails at ({a},{b}), point {p}",
                        kind="lambda",
                        a=a,
                        b=b,
                        point=p,
                    )
                if rho_tgt[t_ab[p]] != t_b[rho_src[p]]:
                    raise SquareViolationError(
                        f"rho square fails at ({a},{b}), point {p}",
                        kind="rho",
                        a=a,
                        b=b,
                        point=p,
                    )
    return tr


def compose_transformations(
    f2: Transformation, f1: Transformation
) -> Transformation:
    """Composite of f1 : A -> B and f2 : B -> C.

    Base homomorphisms compose the other way round, and the map family
    pulls f1's maps back along f2's base homomorphism before applying
    f2's own maps.
    """
    if f1.target != f2.source:
        raise ComposeMismatchError("target of f1 must equal source of f2")
    c_base = f2.target.base
    h_map = tuple(f1.h(f2.h(u)) for u in c_base.elements())
    h = Homomorphism(c_base, f1.source.base, h_map)
    maps = tuple(
        tuple(f2.maps[u][v] for v in f1.maps[f2.h(u)])
        for u in c_base.elements()
    )
    return validate_transformation(
        Transformation(f1.source, f2.target, h, maps)
    )


def pullback_system(f: Homomorphism, system: LrSystem) -> LrSystem:
    """Reindex a system over S along f : T -> S to a system over T."""
    if f.codomain != system.base:
        raise ComposeMismatchError("f must land in the system's base")
    t = f.domain
    sizes = tuple(system.index_sizes[f(a)] for a in t.elements())
    lam = tuple(
        system.lam_map(f(a), f(b)) for a in t.elements() for b in t.elements()
    )
    rho = tuple(
        system.rho_map(f(a), f(b)) for a in t.elements() for b in t.elements()
    )
    return validate_axioms(LrSystem(t, sizes, lam, rho))


def restrict(system: LrSystem, subset) -> tuple[LrSystem, Transformation]:
    """Restriction to a product-closed element set, with its canonical
    arrow (inclusion on the base, identity index maps)."""
    elems = tuple(sorted(set(subset)))
    sub = subsemigroup_table(system.base, elems)  # raises NotClosedError
    sizes = tuple(system.index_sizes[e] for e in elems)
    lam = tuple(
        system.lam_map(elems[i], elems[j])
        for i in range(len(elems))
        for j in range(len(elems))
    )
    rho = tuple(
        system.rho_map(elems[i], elems[j])
        for i in range(len(elems))
        for j in range(len(elems))
    )
    restricted = validate_axioms(LrSystem(sub, sizes, lam, rho))
    inclusion = Homomorphism(sub, system.base, elems)
    maps = tuple(tuple(range(k)) for k in sizes)
    arrow = validate_transformation(
        Transformation(system, restricted, inclusion, maps)
    )
    return restricted, arrow


def is_system_isomorphism(tr: Transformation) -> bool:
    """True iff h is a base isomorphism and every t[a] is a bijection."""
    if not tr.h.is_bijective():
        return False
    for a in tr.target.base.elements():
        if sorted(tr.maps[a]) != list(range(tr.target.index_sizes[a])):
            return False
    return True


def induced_hom(
    h_sg: FiniteSemigroup, tr: Transformation, cap: int = DEFAULT_UNIVERSE_CAP
) -> Homomorphism:
    """The product homomorphism H^[target] -> H^[source] induced by an
    arrow: (x, a) |-> (x o t[a], h(a)). Contravariant in the arrow."""
    domain = product_table(h_sg, tr.target, cap=cap)
    codomain = product_table(h_sg, tr.source, cap=cap)
    src_elems = universe(h_sg, tr.source, cap=cap)
    src_index = {e: i for i, e in enumerate(src_elems)}
    mapping = []
    for p in universe(h_sg, tr.target, cap=cap):
        a = p.anchor
        values = tuple(p.values[v] for v in tr.maps[a])
        mapping.append(src_index[ProductElement(tr.h(a), values)])
    return Homomorphism(domain, codomain, tuple(mapping))


# ---------------------------------------------------------------------------
# Truncated free systems

Word = tuple[int, ...]


def _words_up_to(alphabet: int, bound: int, include_empty: bool) -> tuple[Word, ...]:
    out: list[Word] = [()] if include_empty else []
    for length in range(1, bound + 1):
        out.extend(itertools.product(range(alphabet), repeat=length))
    return tuple(out)


@dataclass(frozen=True)
class FreeAxiomReport:
    instances: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


class TruncatedFreeSystem:
    """An index-map system over words of bounded length.

    In plain mode the base is the free semigroup on the alphabet, fibers
    of words are products of the letter fibers, and the pair maps are the
    two projections. In unit mode (``shared_size`` given) the base is the
    free monoid: the empty word carries the shared set, a word's fiber
    keeps only chain-compatible tuples (each letter's rho value meets the
    next letter's lambda value in the shared set), and the maps to and
    from the empty word are assembled from the per-letter maps.

    Everything is materialised for words of length <= bound; operations
    return None beyond the bound, and the axiom check quantifies only
    over triples whose full concatenation stays within it.
    """

    def __init__(
        self,
        letter_sizes,
        bound: int,
        shared_size: int | None = None,
        letter_lambda=None,
        letter_rho=None,
    ):
        if bound < 1:
            raise MapRangeError("length bound must be at least 1")
        self.letter_sizes = tuple(letter_sizes)
        if any(k < 0 for k in self.letter_sizes):
            raise MapRangeError("letter fiber sizes must be non-negative")
        self.alphabet = len(self.letter_sizes)
        self.bound = bound
        self.unit = shared_size is not None
        self.shared_size = shared_size
        if self.unit:
            if shared_size < 1:
                raise MapRangeError("shared set must be nonempty")
            if letter_lambda is None or letter_rho is None:
                raise MapRangeError("unit mode needs per-letter maps")
            self.letter_lambda = tuple(tuple(m) for m in letter_lambda)
            self.letter_rho = tuple(tuple(m) for m in letter_rho)
            for x in range(self.alphabet):
                for m, tag in ((self.letter_lambda[x], "lambda"),
                               (self.letter_rho[x], "rho")):
                    if len(m) != self.letter_sizes[x]:
                        raise MapRangeError(f"letter {tag}[{x}] has wrong length")
                    if any(not 0 <= v < shared_size for v in m):
                        raise MapRangeError(f"letter {tag}[{x}] out of range")
        else:
            self.letter_lambda = None
            self.letter_rho = None
        self.words = _words_up_to(self.alphabet, bound, self.unit)
        self._fibers: dict[Word, list] = {}
        self._pos: dict[Word, dict] = {}
        for w in self.words:
            fiber = self._build_fiber(w)
            self._fibers[w] = fiber
            self._pos[w] = {pt: i for i, pt in enumerate(fiber)}

    def _build_fiber(self, w: Word):
        if w == ():
            return list(range(self.shared_size))
        points = itertools.product(*(range(self.letter_sizes[x]) for x in w))
        if not self.unit:
            return list(points)
        out = []
        for v in points:
            if all(
                self.letter_rho[w[i]][v[i]] == self.letter_lambda[w[i + 1]][v[i + 1]]
                for i in range(len(w) - 1)
            ):
                out.append(v)
        return out

    def elements(self) -> tuple[Word, ...]:
        return self.words

    def mul(self, w: Word, u: Word) -> Word | None:
        wu = w + u
        return wu if len(wu) <= self.bound else None

    def fiber(self, w: Word):
        return self._fibers[w]

    def fiber_size(self, w: Word) -> int:
        return len(self._fibers[w])

    def position(self, w: Word, point) -> int:
        return self._pos[w][point]

    def lam_map(self, w: Word, u: Word) -> tuple[int, ...]:
        wu = self.mul(w, u)
        if wu is None:
            raise MapRangeError("pair escapes the length bound")
        if u == ():
            return tuple(range(self.fiber_size(w)))
        if w == ():
            # into the shared set; positions there are the values themselves
            return tuple(
                self.letter_lambda[u[0]][v[0]] for v in self._fibers[u]
            )
        k = len(w)
        pos_w = self._pos[w]
        return tuple(pos_w[v[:k]] for v in self._fibers[wu])

    def rho_map(self, w: Word, u: Word) -> tuple[int, ...]:
        wu = self.mul(w, u)
        if wu is None:
            raise MapRangeError("pair escapes the length bound")
        if w == ():
            return tuple(range(self.fiber_size(u)))
        if u == ():
            return tuple(
                self.letter_rho[w[-1]][v[-1]] for v in self._fibers[w]
            )
        k = len(w)
        pos_u = self._pos[u]
        return tuple(pos_u[v[k:]] for v in self._fibers[wu])

    def check_axioms(self) -> FreeAxiomReport:
        """All axiom instances whose triple concatenation stays in bound."""
        violations = []
        instances = 0
        for a in self.words:
            for b in self.words:
                ab = self.mul(a, b)
                if ab is None:
                    continue
                lam_ab = self.lam_map(a, b)
                rho_ab = self.rho_map(a, b)
                for c in self.words:
                    abc = self.mul(ab, c)
                    if abc is None:
                        continue
                    bc = b + c
                    instances += 1
                    lam_ab_c = self.lam_map(ab, c)
                    rho_a_bc = self.rho_map(a, bc)
                    lam_a_bc = self.lam_map(a, bc)
                    rho_b_c = self.rho_map(b, c)
                    lam_b_c = self.lam_map(b, c)
                    rho_ab_c = self.rho_map(ab, c)
                    for p in range(self.fiber_size(abc)):
                        if lam_ab[lam_ab_c[p]] != lam_a_bc[p]:
                            violations.append(("alpha", a, b, c, p))
                        if rho_b_c[rho_a_bc[p]] != rho_ab_c[p]:
                            violations.append(("beta", a, b, c, p))
                        if rho_ab[lam_ab_c[p]] != lam_b_c[rho_a_bc[p]]:
                            violations.append(("gamma", a, b, c, p))
        return FreeAxiomReport(instances, tuple(violations))

    def unital_on_truncated(self) -> bool:
        """Unit mode: lam[w, empty] and rho[empty, w] are identities for
        every materialised word."""
        if not self.unit:
            return False
        for w in self.words:
            ident = tuple(range(self.fiber_size(w)))
            if self.lam_map(w, ()) != ident or self.rho_map((), w) != ident:
                return False
        return True


def free_semigroup_system(letter_sizes, bound: int) -> TruncatedFreeSystem:
    """Fibers of words are products of letter fibers; maps are the two
    projections. Axioms hold on the nose; check_axioms confirms it
    mechanically over the materialised range."""
    return TruncatedFreeSystem(letter_sizes, bound)


def free_monoid_system(
    shared_size: int, letter_lambda, letter_rho, bound: int
) -> TruncatedFreeSystem:
    """Unit-mode free system built from per-letter maps into a shared set."""
    letter_sizes = tuple(len(m) for m in letter_lambda)
    if tuple(len(m) for m in letter_rho) != letter_sizes:
        raise MapRangeError("letter lambda and rho must agree on fiber sizes")
    return TruncatedFreeSystem(
        letter_sizes,
        bound,
        shared_size=shared_size,
        letter_lambda=letter_lambda,
        letter_rho=letter_rho,
    )


# ---------------------------------------------------------------------------
# The canonical arrow into the free system


def word_product(base: FiniteSemigroup, word: Word) -> int:
    return reduce(base.mul, word)


def canonical_components(system: LrSystem, word: Word, z: int) -> tuple[int, ...]:
    """Value of the canonical map at index point z of the evaluated word.

    The first component peels z through lam against the rest of the word,
    the last through rho against the prefix, and each middle component
    routes through rho after lam.
    """
    n = len(word)
    if n == 1:
        return (z,)
    base = system.base
    prefix = [word[0]]
    for s in word[1:]:
        prefix.append(base.mul(prefix[-1], s))
    # prefix[j] = product of word[0..j]
    suffix = [word[-1]]
    for s in reversed(word[:-1]):
        suffix.append(base.mul(s, suffix[-1]))
    suffix.reverse()
    # suffix[j] = product of word[j..n-1]
    comps = [system.lam_map(word[0], suffix[1])[z]]
    for j in range(1, n - 1):
        inner = system.lam_map(prefix[j], suffix[j + 1])[z]
        comps.append(system.rho_map(prefix[j - 1], word[j])[inner])
    comps.append(system.rho_map(prefix[n - 2], word[n - 1])[z])
    return tuple(comps)


def canonical_component_alt(system: LrSystem, word: Word, j: int, z: int) -> int:
    """Equivalent middle-component route (lam after rho); agreement with
    the primary route is itself an instance of the gamma axiom."""
    n = len(word)
    if not 1 <= j <= n - 2:
        raise ValueError("alternative formula applies to middle components")
    base = system.base
    prefix = [word[0]]
    for s in word[1:]:
        prefix.append(base.mul(prefix[-1], s))
    suffix = [word[-1]]
    for s in reversed(word[:-1]):
        suffix.append(base.mul(s, suffix[-1]))
    suffix.reverse()
    inner = system.rho_map(prefix[j - 1], suffix[j])[z]
    return system.lam_map(word[j], suffix[j + 1])[inner]


@dataclass(frozen=True)
class FreeSquareReport:
    pairs_checked: int
    middle_points_checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


class FreeTransformation:
    """Canonical arrow from a concrete system into the truncated free
    system over its base elements.

    The base homomorphism is word evaluation; index maps follow
    canonical_components, with t the identity on single letters, which is
    what makes the induced product homomorphism surjective.
    """

    def __init__(self, source: LrSystem, free: TruncatedFreeSystem, maps):
        self.source = source
        self.free = free
        self.maps = dict(maps)

    def base_image(self, w: Word) -> int:
        return word_product(self.source.base, w)

    def square_report(self) -> FreeSquareReport:
        violations = []
        pairs = 0
        middle = 0
        src = self.source
        for w in self.free.words:
            if len(w) < 3:
                continue
            ow = self.base_image(w)
            for z in range(src.index_sizes[ow]):
                comps = canonical_components(src, w, z)
                for j in range(1, len(w) - 1):
                    middle += 1
                    if comps[j] != canonical_component_alt(src, w, j, z):
                        violations.append(("middle", w, j, z))
        for w in self.free.words:
            for u in self.free.words:
                wu = self.free.mul(w, u)
                if wu is None:
                    continue
                pairs += 1
                ow, ou = self.base_image(w), self.base_image(u)
                lam_src = src.lam_map(ow, ou)
                rho_src = src.rho_map(ow, ou)
                lam_free = self.free.lam_map(w, u)
                rho_free = self.free.rho_map(w, u)
                t_wu, t_w, t_u = self.maps[wu], self.maps[w], self.maps[u]
                for p in range(src.index_sizes[src.base.mul(ow, ou)]):
                    if lam_free[t_wu[p]] != t_w[lam_src[p]]:
                        violations.append(("lambda", w, u, p))
                    if rho_free[t_wu[p]] != t_u[rho_src[p]]:
                        violations.append(("rho", w, u, p))
        return FreeSquareReport(pairs, middle, tuple(violations))


def canonical_transformation(
    system: LrSystem, bound: int = 3
) -> FreeTransformation:
    """Build the canonical arrow at the given truncation bound.

    The free system's alphabet is the base element set with the system's
    own fiber sizes; the maps land in the free fibers by construction.
    """
    free = free_semigroup_system(system.index_sizes, bound)
    maps = {}
    for w in free.words:
        ow = word_product(system.base, w)
        seq = []
        for z in range(system.index_sizes[ow]):
            seq.append(free.position(w, canonical_components(system, w, z)))
        maps[w] = tuple(seq)
    return FreeTransformation(system, free, maps)


# ---------------------------------------------------------------------------
# Induced homomorphism out of the truncated free product


@dataclass(frozen=True)
class FreeInducedHom:
    """Partial-structure verification of the induced homomorphism.

    The free-side product is only defined for pairs whose concatenated
    word stays within the bound, so the homomorphism property quantifies
    over exactly those pairs; surjectivity is onto the full concrete
    product.
    """

    homomorphic: bool
    surjective: bool
    pairs_checked: int
    domain_size: int
    codomain_size: int

    @property
    def ok(self) -> bool:
        return self.homomorphic and self.surjective


def induced_free_hom(
    h_sg: FiniteSemigroup,
    tr: FreeTransformation,
    cap: int = DEFAULT_UNIVERSE_CAP,
) -> FreeInducedHom:
    """Map (x, w) |-> (x o t[w], evaluated w) and verify it on in-range
    pairs, plus surjectivity (single letters already cover the image)."""
    system = tr.source
    free = tr.free
    target = product_table(h_sg, system, cap=cap)
    src_elems = universe(h_sg, system, cap=cap)
    src_index = {e: i for i, e in enumerate(src_elems)}

    domain_size = sum(h_sg.size ** free.fiber_size(w) for w in free.words)
    if domain_size > cap:
        raise SizeCapError(
            f"truncated free product has {domain_size} elements, cap is {cap}"
        )

    def image_index(x: tuple, w: Word) -> int:
        values = tuple(x[v] for v in tr.maps[w])
        return src_index[ProductElement(tr.base_image(w), values)]

    hit = set()
    for w in free.words:
        for x in itertools.product(range(h_sg.size), repeat=free.fiber_size(w)):
            hit.add(image_index(x, w))
    surjective = len(hit) == target.size

    homomorphic = True
    pairs = 0
    for w in free.words:
        kw = free.fiber_size(w)
        for u in free.words:
            wu = free.mul(w, u)
            if wu is None:
                continue
            lam = free.lam_map(w, u)
            rho = free.rho_map(w, u)
            ku = free.fiber_size(u)
            for x in itertools.product(range(h_sg.size), repeat=kw):
                ix = image_index(x, w)
                for y in itertools.product(range(h_sg.size), repeat=ku):
                    pairs += 1
                    z = tuple(
                        h_sg.mul(x[lam[i]], y[rho[i]])
                        for i in range(free.fiber_size(wu))
                    )
                    if image_index(z, wu) != target.mul(ix, image_index(y, u)):
                        homomorphic = False
    return FreeInducedHom(
        homomorphic, surjective, pairs, domain_size, target.size
    )
