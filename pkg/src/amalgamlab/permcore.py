"""Exact permutation-group engine.

Permutations are bijections on {0..d-1} stored as numpy image arrays; groups
are given by generator lists and carry a lazily built stabiliser chain
(base and strong generating set).  The chain construction is a deterministic
Schreier-Sims: orbits are explored breadth-first with generators in a fixed
order, and new base points are the smallest point moved by the offending
residue (after any prescribed prefix).  Two builds from the same generator
list therefore produce identical bases, transversals and cached orders.

The action convention is left-to-right throughout: ``x ^ (p*q) == q(p(x))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

DEFAULT_ELEMENT_BOUND = 10**6
COSET_INDEX_BOUND = 10**5


class ScopeError(RuntimeError):
    """An operation exceeded its configured size bound."""


class Permutation:
    """A permutation of {0..d-1}, stored as an image array."""

    __slots__ = ("images", "_hash")

    def __init__(self, images, _checked: bool = False):
        arr = np.asarray(images, dtype=np.int32)
        if not _checked:
            if arr.ndim != 1:
                raise ValueError("image array must be one-dimensional")
            n = arr.shape[0]
            if n == 0:
                raise ValueError("degree-0 permutations are not allowed")
            seen = np.zeros(n, dtype=bool)
            if arr.min(initial=0) < 0 or arr.max(initial=-1) >= n:
                raise ValueError("images out of range")
            seen[arr] = True
            if not seen.all():
                raise ValueError("image array is not a bijection")
        arr.setflags(write=False)
        self.images = arr
        self._hash = None

    @property
    def degree(self) -> int:
        return self.images.shape[0]

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.images.shape[0] != other.images.shape[0]:
            raise ValueError("degree mismatch in composition")
        return Permutation(other.images[self.images], _checked=True)

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.degree, dtype=np.int32)
        return Permutation(inv, _checked=True)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return bool((self.images == np.arange(self.degree, dtype=np.int32)).all())

    def order(self) -> int:
        import math

        n = 1
        for c in self.cycles(include_fixed=False):
            n = math.lcm(n, len(c))
        return n

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        img = self.images
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = int(img[start])
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = int(img[j])
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def moved_points(self) -> list[int]:
        return np.nonzero(self.images != np.arange(self.degree, dtype=np.int32))[0].tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and bool((self.images == other.images).all())

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images.tobytes())
        return self._hash

    def key(self) -> bytes:
        """Canonical bytes key, for dictionaries over many permutations."""
        return self.images.tobytes()

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation(identity, degree={self.degree})"
        txt = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation({txt}, degree={self.degree})"


def identity(degree: int) -> Permutation:
    return Permutation(np.arange(degree, dtype=np.int32), _checked=True)


def from_cycles(degree: int, cycles) -> Permutation:
    img = np.arange(degree, dtype=np.int32)
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:]):
            img[a] = b
        if cyc:
            img[cyc[-1]] = cyc[0]
    return Permutation(img)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right composition: compose(p, q) maps x to q(p(x))."""
    return p * q


# ---------------------------------------------------------------------------
# Stabiliser chains (deterministic Schreier-Sims)
# ---------------------------------------------------------------------------


class _Level:
    __slots__ = ("point", "gens", "transversal", "orbit_list", "processed")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[Permutation] = []
        ident = identity(degree)
        self.transversal: dict[int, tuple[Permutation, Permutation]] = {point: (ident, ident)}
        self.orbit_list: list[int] = [point]
        self.processed: set[tuple[int, int]] = set()


class _Chain:
    """Base and strong generating set with transversals."""

    def __init__(self, degree: int, prefix=()):
        self.degree = degree
        self.prefix = list(prefix)
        self.levels: list[_Level] = []
        for pt in self.prefix:
            self.levels.append(_Level(pt, degree))

    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.transversal)
        return n

    def sift(self, g: Permutation, start: int = 0) -> tuple[int, Permutation]:
        """Strip g through levels[start:]. Returns (failing level or len, residue)."""
        r = g
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            gamma = int(r.images[lv.point])
            if gamma == lv.point:
                continue
            pair = lv.transversal.get(gamma)
            if pair is None:
                return i, r
            r = r * pair[1]
        return len(self.levels), r

    def contains(self, g: Permutation) -> bool:
        _, r = self.sift(g)
        return r.is_identity()

    def _smallest_moved(self, g: Permutation) -> int:
        img = g.images
        moved = np.nonzero(img != np.arange(self.degree, dtype=np.int32))[0]
        return int(moved[0])

    def _extend_orbit(self, i: int) -> None:
        lv = self.levels[i]
        queue = list(lv.orbit_list)
        k = 0
        while k < len(queue):
            beta = queue[k]
            k += 1
            u_beta = lv.transversal[beta][0]
            for s in lv.gens:
                gamma = int(s.images[beta])
                if gamma not in lv.transversal:
                    u = u_beta * s
                    lv.transversal[gamma] = (u, u.inverse())
                    lv.orbit_list.append(gamma)
                    queue.append(gamma)

    def _add_strong(self, j: int, r: Permutation) -> None:
        for i in range(j + 1):
            self.levels[i].gens.append(r)
        for i in range(j + 1):
            self._extend_orbit(i)

    def _insert(self, g: Permutation) -> int | None:
        j, r = self.sift(g)
        if r.is_identity():
            return None
        if j == len(self.levels):
            self.levels.append(_Level(self._smallest_moved(r), self.degree))
            j = len(self.levels) - 1
        self._add_strong(j, r)
        return j

    def _process_level(self, i: int) -> int | None:
        """Sift unprocessed Schreier generators of level i.

        Returns the level index where a new strong generator was added, or
        None once every pair at this level sifts to the identity.
        """
        lv = self.levels[i]
        for beta in list(lv.orbit_list):
            u_beta, _ = lv.transversal[beta]
            for k in range(len(lv.gens)):
                if (beta, k) in lv.processed:
                    continue
                lv.processed.add((beta, k))
                s = lv.gens[k]
                gamma = int(s.images[beta])
                schreier = u_beta * s * lv.transversal[gamma][1]
                if schreier.is_identity():
                    continue
                j, r = self.sift(schreier, i + 1)
                if r.is_identity():
                    continue
                if j == len(self.levels):
                    self.levels.append(_Level(self._smallest_moved(r), self.degree))
                    j = len(self.levels) - 1
                self._add_strong(j, r)
                return j
        return None

    def _close(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            j = self._process_level(i)
            if j is None:
                i -= 1
            else:
                i = j

    def build(self, gens) -> None:
        for g in gens:
            if not g.is_identity():
                self._insert(g)
        self._close()

    def add_generator(self, g: Permutation) -> bool:
        """Incrementally extend the chain by one generator; True if it grew."""
        if g.is_identity():
            return False
        before = self.order()
        if self._insert(g) is None:
            return False
        self._close()
        return self.order() != before

    def strong_generators_from(self, depth: int) -> list[Permutation]:
        """Strong generators fixing the first `depth` base points."""
        if depth >= len(self.levels):
            return []
        return list(self.levels[depth].gens)

    def elements(self, bound: int) -> list[Permutation]:
        if self.order() > bound:
            raise ScopeError(f"group order {self.order()} exceeds enumeration bound {bound}")
        out = [identity(self.degree)]
        for lv in reversed(self.levels):
            trans = [lv.transversal[p][0] for p in lv.orbit_list]
            out = [h * t for t in trans for h in out]
        return out


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------


class GeneratedGroup:
    """A finite permutation group given by generators on {0..degree-1}."""

    def __init__(self, degree: int, generators, name: str | None = None):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree does not match group degree")
        self.degree = degree
        self.generators = gens
        self.name = name
        self._chain: _Chain | None = None

    # -- chain management ---------------------------------------------------

    def chain(self) -> _Chain:
        if self._chain is None:
            ch = _Chain(self.degree)
            ch.build(self.generators)
            self._chain = ch
        return self._chain

    def chain_with_prefix(self, prefix) -> _Chain:
        ch = _Chain(self.degree, prefix=prefix)
        ch.build(self.generators)
        return ch

    def build_bsgs(self) -> "GeneratedGroup":
        """Force construction of the stabiliser chain; idempotent."""
        self.chain()
        return self

    def base(self) -> list[int]:
        return self.chain().base()

    def order(self) -> int:
        return self.chain().order()

    def membership(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError("degree mismatch in membership test")
        return self.chain().contains(p)

    __contains__ = membership

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    # -- orbits and transitivity --------------------------------------------

    def orbit(self, point: int) -> set[int]:
        seen = {point}
        queue = [point]
        while queue:
            x = queue.pop()
            for g in self.generators:
                y = int(g.images[x])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def orbits(self) -> list[list[int]]:
        unseen = np.ones(self.degree, dtype=bool)
        out = []
        for x in range(self.degree):
            if unseen[x]:
                orb = sorted(self.orbit(x))
                for y in orb:
                    unseen[y] = False
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def is_k_transitive(self, k: int) -> bool:
        """Decide k-transitivity by iterated point stabilisers."""
        if k < 1:
            raise ValueError("k must be at least 1")
        if k > self.degree:
            raise ValueError("k exceeds the degree")
        group: GeneratedGroup = self
        excluded: set[int] = set()
        for step in range(k):
            remaining = [x for x in range(self.degree) if x not in excluded]
            x0 = remaining[0]
            orb = group.orbit(x0)
            if not all(x in orb for x in remaining):
                return False
            if step == k - 1:
                return True
            group = group.point_stabiliser(x0)
            excluded.add(x0)
        return True

    # -- stabilisers ---------------------------------------------------------

    def point_stabiliser(self, point: int) -> "GeneratedGroup":
        return self.pointwise_stabiliser([point])

    def pointwise_stabiliser(self, points) -> "GeneratedGroup":
        pts = []
        for p in points:
            p = int(p)
            if p < 0 or p >= self.degree:
                raise ValueError("stabilised point out of range")
            if p not in pts:
                pts.append(p)
        ch = self.chain_with_prefix(pts)
        gens = ch.strong_generators_from(len(pts))
        if not gens:
            gens = [identity(self.degree)]
        return GeneratedGroup(self.degree, gens)

    def elements(self, bound: int = DEFAULT_ELEMENT_BOUND) -> list[Permutation]:
        """All group elements, via transversal products. Deterministic order."""
        return self.chain().elements(bound)

    def random_element(self, rng) -> Permutation:
        """Deterministic pseudo-random element: a word in the generators."""
        if not self.generators:
            return identity(self.degree)
        length = rng.randrange(3, 12)
        g = identity(self.degree)
        for _ in range(length):
            h = self.generators[rng.randrange(len(self.generators))]
            if rng.randrange(2):
                h = h.inverse()
            g = g * h
        return g

    def conjugate_subgroup(self, h: Permutation) -> "GeneratedGroup":
        hinv = h.inverse()
        return GeneratedGroup(self.degree, [hinv * g * h for g in self.generators])

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"GeneratedGroup(degree={self.degree}, ngens={len(self.generators)}{tag})"


def trivial_group(degree: int) -> GeneratedGroup:
    return GeneratedGroup(degree, [identity(degree)])


# ---------------------------------------------------------------------------
# Group maps (action-derived homomorphisms only)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupMap:
    """A homomorphism built from an action; never from raw generator images.

    `gen_images[i]` is the image of `source.generators[i]` on the target
    points.  Well-definedness is guaranteed by the constructing operation
    (induced action on an invariant set, coset action, or restriction).
    """

    source: GeneratedGroup
    target_degree: int
    gen_images: tuple
    kind: str
    point_map: tuple = field(default=())

    def image_group(self) -> GeneratedGroup:
        gens = self.gen_images if self.gen_images else (identity(self.target_degree),)
        return GeneratedGroup(self.target_degree, gens)

    def kernel(self) -> GeneratedGroup:
        """Kernel via the diagonal action on source points + target points."""
        d1, d2 = self.source.degree, self.target_degree
        diag_gens = []
        for g, gi in zip(self.source.generators, self.gen_images):
            img = np.concatenate([g.images, gi.images + d1])
            diag_gens.append(Permutation(img, _checked=True))
        diag = GeneratedGroup(d1 + d2, diag_gens or [identity(d1 + d2)])
        fixer = diag.pointwise_stabiliser(range(d1, d1 + d2))
        gens = [Permutation(g.images[:d1], _checked=True) for g in fixer.generators]
        return GeneratedGroup(d1, gens or [identity(d1)])


def induced_action(group: GeneratedGroup, points) -> GroupMap:
    """Action of `group` on an invariant point set, in sorted point order."""
    pts = sorted(set(int(p) for p in points))
    if not pts:
        raise ValueError("empty point set")
    index = {p: i for i, p in enumerate(pts)}
    for g in group.generators:
        for p in pts:
            if int(g.images[p]) not in index:
                raise ValueError(f"point set is not invariant (generator moves {p} outside)")
    images = []
    for g in group.generators:
        img = np.array([index[int(g.images[p])] for p in pts], dtype=np.int32)
        images.append(Permutation(img, _checked=True))
    return GroupMap(group, len(pts), tuple(images), "induced-action", tuple(pts))


def kernel(m: GroupMap) -> GeneratedGroup:
    return m.kernel()


def coset_action(group: GeneratedGroup, subgroup: GeneratedGroup) -> GroupMap:
    """Right-coset action of `group` on the cosets of `subgroup`."""
    if subgroup.degree != group.degree:
        raise ValueError("degree mismatch between group and subgroup")
    for g in subgroup.generators:
        if not group.membership(g):
            raise ValueError("second argument is not a subgroup: generator outside group")
    index = group.order() // subgroup.order()
    if group.order() % subgroup.order() != 0:
        raise ValueError("subgroup order does not divide group order")
    if index > COSET_INDEX_BOUND:
        raise ScopeError(f"coset index {index} exceeds bound {COSET_INDEX_BOUND}")

    ch = subgroup.chain()

    def canon(g: Permutation) -> Permutation:
        for lv in ch.levels:
            img = g.images
            best_pt, best_val = None, None
            for beta in lv.orbit_list:
                v = int(img[beta])
                if best_val is None or v < best_val:
                    best_val, best_pt = v, beta
            if best_pt != lv.point:
                g = lv.transversal[best_pt][0] * g
        return g

    start = canon(identity(group.degree))
    reps = [start]
    rep_index = {start.key(): 0}
    k = 0
    while k < len(reps):
        r = reps[k]
        k += 1
        for g in group.generators:
            c = canon(r * g)
            if c.key() not in rep_index:
                if len(reps) >= index:
                    raise RuntimeError("coset enumeration exceeded expected index")
                rep_index[c.key()] = len(reps)
                reps.append(c)
    if len(reps) != index:
        raise RuntimeError("coset enumeration found fewer cosets than the index")
    images = []
    for g in group.generators:
        img = np.array([rep_index[canon(r * g).key()] for r in reps], dtype=np.int32)
        images.append(Permutation(img, _checked=True))
    return GroupMap(group, index, tuple(images), "coset-action")


# ---------------------------------------------------------------------------
# Subgroup constructions
# ---------------------------------------------------------------------------


def _closure_group(degree: int, gens: list[Permutation]) -> GeneratedGroup:
    return GeneratedGroup(degree, gens or [identity(degree)])


def normal_closure(group: GeneratedGroup, seeds) -> GeneratedGroup:
    """Smallest normal subgroup of `group` containing the seed elements."""
    seeds = [s for s in seeds]
    for s in seeds:
        if not group.membership(s):
            raise ValueError("seed element lies outside the group")
    ch = _Chain(group.degree)
    gens: list[Permutation] = []
    queue: list[Permutation] = []
    gen_invs = [g.inverse() for g in group.generators]
    for s in seeds:
        if not s.is_identity() and not ch.contains(s):
            ch.add_generator(s)
            gens.append(s)
            queue.append(s)
    while queue:
        s = queue.pop(0)
        for g, ginv in zip(group.generators, gen_invs):
            t = ginv * s * g
            if not ch.contains(t):
                ch.add_generator(t)
                gens.append(t)
                queue.append(t)
    out = _closure_group(group.degree, gens)
    if gens:
        out._chain = ch
    return out


def derived_subgroup(group: GeneratedGroup) -> GeneratedGroup:
    comms = []
    gens = group.generators
    for i, a in enumerate(gens):
        for b in gens[i:]:
            c = a.inverse() * b.inverse() * a * b
            if not c.is_identity():
                comms.append(c)
    if not comms:
        return trivial_group(group.degree)
    return normal_closure(group, comms)


def centre(group: GeneratedGroup, element_bound: int = DEFAULT_ELEMENT_BOUND) -> GeneratedGroup:
    """Centre of the group.

    Small groups are scanned element by element.  Transitive groups use the
    fact that a centralising permutation is determined by the image of one
    point; the same propagation runs per orbit for intransitive groups, with
    candidates combined across orbits.
    """
    order = group.order()
    if order <= 10**4:
        central = [x for x in group.elements(element_bound)
                   if not x.is_identity()
                   and all((x * g) == (g * x) for g in group.generators)]
        return _closure_group(group.degree, central)

    orbits = group.orbits()
    if len(orbits) > 2:
        raise ScopeError("centre computation supports at most two orbits at this size")

    def candidates_on(orbit: list[int], target0: int) -> dict[int, int] | None:
        # propagate z(x^g) = z(x)^g from z(orbit[0]) = target0
        base = orbit[0]
        mapping = {base: target0}
        queue = [base]
        while queue:
            x = queue.pop()
            for g in group.generators:
                y = int(g.images[x])
                val = int(g.images[mapping[x]])
                if y in mapping:
                    if mapping[y] != val:
                        return None
                else:
                    mapping[y] = val
                    queue.append(y)
        return mapping

    per_orbit: list[list[dict[int, int]]] = []
    for orb in orbits:
        cands = []
        for t in orb:
            m = candidates_on(orb, t)
            if m is not None:
                cands.append(m)
        per_orbit.append(cands)

    found = []
    from itertools import product as iproduct

    for combo in iproduct(*per_orbit):
        img = np.arange(group.degree, dtype=np.int32)
        for m in combo:
            for k, v in m.items():
                img[k] = v
        try:
            z = Permutation(img)
        except ValueError:
            continue
        if z.is_identity():
            continue
        if all((z * g) == (g * z) for g in group.generators) and group.membership(z):
            found.append(z)
    return _closure_group(group.degree, found)


def intersection(a: GeneratedGroup, b: GeneratedGroup,
                 element_bound: int = DEFAULT_ELEMENT_BOUND) -> GeneratedGroup:
    """Intersection, by enumerating the smaller group and sifting in the larger."""
    if a.degree != b.degree:
        raise ValueError("degree mismatch in intersection")
    small, large = (a, b) if a.order() <= b.order() else (b, a)
    if small.order() > element_bound:
        raise ScopeError("both groups exceed the element-enumeration bound")
    ch = _Chain(a.degree)
    gens: list[Permutation] = []
    for x in small.elements(element_bound):
        if x.is_identity():
            continue
        if large.membership(x) and not ch.contains(x):
            ch.add_generator(x)
            gens.append(x)
    out = _closure_group(a.degree, gens)
    if gens:
        out._chain = ch
    return out


# ---------------------------------------------------------------------------
# Group file format
# ---------------------------------------------------------------------------


def group_to_dict(group: GeneratedGroup) -> dict:
    d = {"degree": group.degree,
         "generators": [g.images.tolist() for g in group.generators]}
    if group.name:
        d["name"] = group.name
    return d


def group_from_dict(d: dict) -> GeneratedGroup:
    gens = [Permutation(images) for images in d["generators"]]
    return GeneratedGroup(int(d["degree"]), gens, name=d.get("name"))


def save_group(group: GeneratedGroup, path) -> None:
    with open(path, "w") as fh:
        json.dump(group_to_dict(group), fh)
        fh.write("\n")


def load_group(path) -> GeneratedGroup:
    with open(path) as fh:
        return group_from_dict(json.load(fh))
