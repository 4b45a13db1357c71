"""Structural invariants of finite permutation groups.

Solubility, Jordan-Holder composition factors, socle, identification of small
simple groups by order (with the one order coincidence at 20160 resolved by
element orders), and certified isomorphism testing by generator-image search.

Quotients are never handled abstractly: a quotient G/N is realized either as
the induced action on the N-orbit partition or, when that action stalls, as
the faithful right-coset action of G on the cosets of N.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .permcore import (
    DEFAULT_ELEMENT_BOUND,
    GeneratedGroup,
    GroupMap,
    Permutation,
    ScopeError,
    coset_action,
    derived_subgroup,
    from_cycles,
    identity,
    normal_closure,
    trivial_group,
)

ISO_ORDER_CAP = 5 * 10**4
EXHAUSTIVE_ORDER_CAP = 10**4


# ---------------------------------------------------------------------------
# Factor labels and the simple-group order table
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class FactorLabel:
    order: int
    kind: str          # "cyclic" | "alternating" | "simple" | "unknown"
    param: str

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"Z_{self.param}"
        if self.kind == "alternating":
            return f"A_{self.param}"
        if self.kind == "unknown":
            return f"unknown({self.order})"
        return self.param


def cyclic_label(p: int) -> FactorLabel:
    return FactorLabel(p, "cyclic", str(p))


def alternating_label(n: int) -> FactorLabel:
    return FactorLabel(math.factorial(n) // 2, "alternating", str(n))


def _prime_power(q: int) -> tuple[int, int] | None:
    for p in range(2, int(q**0.5) + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            return (p, k) if q == 1 else None
    return (q, 1)


def _psl_order(n: int, q: int) -> int:
    o = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        o *= q**i - 1
    return o // math.gcd(n, q - 1)


def _psu_order(n: int, q: int) -> int:
    o = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        o *= q**i - (-1) ** i
    return o // math.gcd(n, q + 1)


def _psp_order(n: int, q: int) -> int:
    o = q ** (n * n)
    for i in range(1, n + 1):
        o *= q ** (2 * i) - 1
    return o // math.gcd(2, q - 1)


_ALIASES = {
    "PSL_2(4)": "A_5", "PSL_2(5)": "A_5", "PSL_2(9)": "A_6",
    "PSL_3(2)": "PSL_2(7)", "PSL_4(2)": "A_8", "PSp_4(3)": "PSU_4(2)",
    "SL_3(2)": "PSL_2(7)", "SL_4(2)": "A_8", "Sp_6(2)": "PSp_6(2)",
}

_TABLE_CAP = 10**7


@lru_cache(maxsize=1)
def simple_order_table() -> dict[int, tuple[str, ...]]:
    """Orders of the nonabelian simple groups up to 10^7, canonical names."""
    names: dict[int, set[str]] = {}

    def add(order: int, name: str):
        if order <= _TABLE_CAP:
            names.setdefault(order, set()).add(_ALIASES.get(name, name))

    for n in range(5, 13):
        add(math.factorial(n) // 2, f"A_{n}")
    pps = [q for q in range(4, 300) if _prime_power(q)]
    for q in pps:
        if q >= 4:
            add(_psl_order(2, q), f"PSL_2({q})")
    for q in pps:
        add(_psl_order(3, q), f"PSL_3({q})")
        add(_psu_order(3, q), f"PSU_3({q})")
        if q <= 10:
            add(_psl_order(4, q), f"PSL_4({q})")
            add(_psu_order(4, q), f"PSU_4({q})")
            add(_psp_order(2, q), f"PSp_4({q})")
            add(_psp_order(3, q), f"PSp_6({q})")
    add(_psl_order(5, 2), "PSL_5(2)")
    add(29120, "Sz(8)")
    add(4245696, "G_2(3)")
    for o, nm in ((7920, "M_11"), (95040, "M_12"), (175560, "J_1"),
                  (443520, "M_22"), (604800, "J_2")):
        add(o, nm)
    # PSp_4(2)' = A_6 and PSU_3(2), Sz(2) etc. are not simple; the generators
    # above only hit simple orders. The single genuine coincidence below 10^7
    # is A_8 vs PSL_3(4) at 20160.
    out = {}
    for o, ns in names.items():
        out[o] = tuple(sorted(ns))
    assert all(len(v) == 1 for o, v in out.items() if o != 20160)
    assert set(out[20160]) == {"A_8", "PSL_3(4)"}
    return out


def _label_from_name(name: str, order: int) -> FactorLabel:
    if name.startswith("A_"):
        return FactorLabel(order, "alternating", name[2:])
    return FactorLabel(order, "simple", name)


# ---------------------------------------------------------------------------
# Element data, fingerprints
# ---------------------------------------------------------------------------


class _ElementData:
    __slots__ = ("elements", "index", "orders", "by_order", "classes", "nclasses")

    def __init__(self, group: GeneratedGroup, bound: int):
        self.elements = group.elements(bound)
        self.index = {g.key(): i for i, g in enumerate(self.elements)}
        self.orders = [g.order() for g in self.elements]
        self.by_order: dict[int, list[int]] = {}
        for i, o in enumerate(self.orders):
            self.by_order.setdefault(o, []).append(i)
        self.classes = None
        self.nclasses = 0

    def conjugacy_classes(self, group: GeneratedGroup) -> list[int]:
        if self.classes is not None:
            return self.classes
        gens = [(g, g.inverse()) for g in group.generators]
        cls = [-1] * len(self.elements)
        cid = 0
        for start in range(len(self.elements)):
            if cls[start] >= 0:
                continue
            cls[start] = cid
            queue = [self.elements[start]]
            while queue:
                x = queue.pop()
                for g, ginv in gens:
                    y = ginv * x * g
                    j = self.index[y.key()]
                    if cls[j] < 0:
                        cls[j] = cid
                        queue.append(y)
            cid += 1
        self.classes = cls
        self.nclasses = cid
        return cls


def element_data(group: GeneratedGroup, bound: int = ISO_ORDER_CAP) -> _ElementData:
    data = getattr(group, "_element_data", None)
    if data is None:
        data = _ElementData(group, bound)
        group._element_data = data
    return data


def order_histogram(group: GeneratedGroup, bound: int = ISO_ORDER_CAP) -> tuple:
    data = element_data(group, bound)
    h: dict[int, int] = {}
    for o in data.orders:
        h[o] = h.get(o, 0) + 1
    return tuple(sorted(h.items()))


@dataclass(frozen=True)
class Fingerprint:
    order: int
    histogram: tuple
    derived_orders: tuple
    centre_order: int
    abelianization: tuple

    def to_dict(self) -> dict:
        return {"order": self.order,
                "histogram": [list(x) for x in self.histogram],
                "derived_orders": list(self.derived_orders),
                "centre_order": self.centre_order,
                "abelianization": list(self.abelianization)}


def fingerprint(group: GeneratedGroup, bound: int = ISO_ORDER_CAP) -> Fingerprint:
    """Isomorphism-invariant data; equality is necessary, not sufficient."""
    from .permcore import centre as centre_op

    if group.order() > bound:
        raise ScopeError("group exceeds the fingerprint bound")
    hist = order_histogram(group, bound)
    ders = [group.order()]
    g = group
    while True:
        d = derived_subgroup(g)
        if d.order() == ders[-1]:
            break
        ders.append(d.order())
        if d.order() == 1:
            break
        g = d
    z = centre_op(group)
    ab = abelian_invariants_of_quotient(group, None)
    return Fingerprint(group.order(), hist, tuple(ders), z.order(), ab)


def abelian_invariants_of_quotient(group: GeneratedGroup, derived=None) -> tuple:
    """Invariant factors of G/G', via a faithful realization of the quotient."""
    d = derived if derived is not None else derived_subgroup(group)
    index = group.order() // d.order()
    if index == 1:
        return ()
    m = coset_action(group, d)
    q = m.image_group()
    data = element_data(q, DEFAULT_ELEMENT_BOUND)
    return _abelian_invariants_from_orders(data.orders)


def _abelian_invariants_from_orders(orders: list[int]) -> tuple:
    """Invariant factors of an abelian group from its element-order list.

    For each prime p, the count of elements of order dividing p^j is
    p^(sum_i min(lambda_i, j)); the differences of the exponents give the
    conjugate of the p-partition.
    """
    n = len(orders)
    from .arith import factorize

    partitions: dict[int, list[int]] = {}
    for p in factorize(n):
        cs = [0]
        j = 1
        while True:
            cnt = sum(1 for o in orders if p**j % o == 0)
            c = round(math.log(cnt, p))
            if c == cs[-1]:
                break
            cs.append(c)
            j += 1
        conj = [cs[k] - cs[k - 1] for k in range(1, len(cs))]  # parts >= k
        lam = []
        i = 1
        while True:
            li = sum(1 for mj in conj if mj >= i)
            if li == 0:
                break
            lam.append(li)
            i += 1
        partitions[p] = sorted(lam, reverse=True)
    width = max(len(v) for v in partitions.values())
    factors = []
    for i in range(width):
        f = 1
        for p, exps in partitions.items():
            if i < len(exps):
                f *= p ** exps[i]
        factors.append(f)
    return tuple(sorted(factors))


# ---------------------------------------------------------------------------
# Solubility
# ---------------------------------------------------------------------------


def is_soluble(group: GeneratedGroup) -> bool:
    g = group
    prev = g.order()
    while True:
        d = derived_subgroup(g)
        o = d.order()
        if o == 1:
            return True
        if o == prev:
            return False
        g, prev = d, o


# ---------------------------------------------------------------------------
# Normal subgroup search
# ---------------------------------------------------------------------------


def _prime_order_candidates(group: GeneratedGroup, seed: int,
                            walk: int = 36) -> list[Permutation]:
    """Deterministic list of prime-order elements to seed normal closures.

    One canonical generator per cyclic subgroup; exhaustive over all cyclic
    subgroups when the group is small, a seeded generator walk otherwise.
    """
    from .arith import factorize

    cands: dict[bytes, Permutation] = {}

    def feed(x: Permutation):
        o = x.order()
        if o == 1:
            return
        for p in factorize(o):
            y = x ** (o // p)
            # canonical generator of <y>
            best = y
            z = y
            for _ in range(p - 2):
                z = z * y
                if z.key() < best.key():
                    best = z
            cands.setdefault(best.key(), best)

    if group.order() <= EXHAUSTIVE_ORDER_CAP:
        for x in group.elements(EXHAUSTIVE_ORDER_CAP):
            feed(x)
    else:
        for g in group.generators:
            feed(g)
        for a in group.generators:
            for b in group.generators:
                feed(a * b)
        rng = random.Random(seed)
        for _ in range(walk):
            feed(group.random_element(rng))
    return [cands[k] for k in sorted(cands)]


def find_proper_normal(group: GeneratedGroup, seed: int = 0) -> GeneratedGroup | None:
    """A proper nontrivial normal subgroup, or None if none was found.

    The None answer is exhaustive (a simplicity certificate) for groups of
    order at most 10^4, and sample-based above that.
    """
    order = group.order()
    if order == 1:
        return None
    d = derived_subgroup(group)
    if 1 < d.order() < order:
        return d
    if d.order() == 1:
        # abelian: any prime-order cyclic subgroup is normal
        for x in _prime_order_candidates(group, seed):
            return GeneratedGroup(group.degree, [x])
        return None
    for x in _prime_order_candidates(group, seed):
        c = normal_closure(group, [x])
        if c.order() < order:
            return c
    return None


def is_simple(group: GeneratedGroup, seed: int = 0) -> bool:
    return group.order() > 1 and find_proper_normal(group, seed) is None


# ---------------------------------------------------------------------------
# Simple-group identification
# ---------------------------------------------------------------------------


def simple_id(group: GeneratedGroup, seed: int = 0,
              assume_simple: bool = False) -> FactorLabel:
    """Label a simple group by order (and element orders at 20160)."""
    order = group.order()
    if order == 1:
        raise ValueError("the trivial group has no simple label")
    from .arith import factorize

    fac = factorize(order)
    if len(fac) == 1 and sum(fac.values()) == 1:
        return cyclic_label(order)
    if not assume_simple and not is_simple(group, seed):
        raise ValueError("input group is not simple")
    if order > _TABLE_CAP:
        return FactorLabel(order, "unknown", "")
    names = simple_order_table().get(order)
    if not names:
        return FactorLabel(order, "unknown", "")
    if len(names) == 1:
        return _label_from_name(names[0], order)
    # 20160: A_8 contains elements of order 15, PSL_3(4) does not
    if _has_element_of_order(group, 15, seed):
        return alternating_label(8)
    return FactorLabel(order, "simple", "PSL_3(4)")


def _has_element_of_order(group: GeneratedGroup, target: int, seed: int,
                          samples: int = 400) -> bool:
    if group.order() <= EXHAUSTIVE_ORDER_CAP:
        return any(x.order() % target == 0 for x in group.elements(EXHAUSTIVE_ORDER_CAP))
    rng = random.Random(seed ^ 0x15)
    for g in group.generators:
        if g.order() % target == 0:
            return True
    for _ in range(samples):
        if group.random_element(rng).order() % target == 0:
            return True
    return False


# ---------------------------------------------------------------------------
# Composition factors
# ---------------------------------------------------------------------------


def _orbit_action_map(group: GeneratedGroup, normal: GeneratedGroup) -> GroupMap:
    """Action of `group` on the orbit partition of a normal subgroup."""
    n = group.degree
    label = np.arange(n, dtype=np.int64)

    def find(x):
        while label[x] != x:
            label[x] = label[label[x]]
            x = label[x]
        return x

    for g in normal.generators:
        for x in range(n):
            a, b = find(x), find(int(g.images[x]))
            if a != b:
                label[max(a, b)] = min(a, b)
    roots = sorted(set(find(x) for x in range(n)))
    rid = {r: i for i, r in enumerate(roots)}
    images = []
    for g in group.generators:
        img = np.empty(len(roots), dtype=np.int32)
        for r in roots:
            img[rid[r]] = rid[find(int(g.images[r]))]
        images.append(Permutation(img, _checked=True))
    return GroupMap(group, len(roots), tuple(images), "induced-action")


def composition_factors(group: GeneratedGroup, seed: int = 0) -> tuple[FactorLabel, ...]:
    """Jordan-Holder composition factors, as a sorted multiset."""
    out: list[FactorLabel] = []
    _factors_of_group(group, seed, out)
    return tuple(sorted(out))


def _factors_of_group(group: GeneratedGroup, seed: int, out: list[FactorLabel]) -> None:
    order = group.order()
    if order == 1:
        return
    from .arith import factorize

    fac = factorize(order)
    if len(fac) == 1 and sum(fac.values()) == 1:
        out.append(cyclic_label(order))
        return
    normal = find_proper_normal(group, seed)
    if normal is None:
        out.append(simple_id(group, seed, assume_simple=True))
        return
    _factors_of_group(normal, seed, out)
    _factors_of_quotient(group, normal, seed, out)


def _factors_of_quotient(group: GeneratedGroup, normal: GeneratedGroup,
                         seed: int, out: list[FactorLabel]) -> None:
    index = group.order() // normal.order()
    if index == 1:
        return
    from .arith import factorize

    fac = factorize(index)
    if len(fac) == 1 and sum(fac.values()) == 1:
        out.append(cyclic_label(index))
        return
    m = _orbit_action_map(group, normal)
    k = m.kernel()
    if k.order() < group.order():
        img = m.image_group()
        if k.order() == normal.order():
            _factors_of_group(img, seed, out)
        else:
            _factors_of_group(img, seed, out)
            _factors_of_quotient(k, normal, seed, out)
        return
    # orbit action stalled; realize G/N faithfully on cosets
    img = coset_action(group, normal).image_group()
    _factors_of_group(img, seed, out)


def composition_factor_set(group: GeneratedGroup, seed: int = 0) -> frozenset[FactorLabel]:
    return frozenset(composition_factors(group, seed))


# ---------------------------------------------------------------------------
# Socle
# ---------------------------------------------------------------------------


def _minimize_normal(group: GeneratedGroup, m: GeneratedGroup, seed: int,
                     closure_memo: dict) -> GeneratedGroup:
    while True:
        shrunk = False
        for x in _prime_order_candidates(m, seed):
            k = x.key()
            if k not in closure_memo:
                closure_memo[k] = normal_closure(group, [x])
            c = closure_memo[k]
            if c.order() < m.order():
                m = c
                shrunk = True
                break
        if not shrunk:
            return m


def socle(group: GeneratedGroup, seed: int = 0) -> GeneratedGroup:
    """Join of the minimal normal subgroups."""
    if group.order() == 1:
        return trivial_group(group.degree)
    minimals: list[GeneratedGroup] = []
    closure_memo: dict[bytes, GeneratedGroup] = {}
    for x in _prime_order_candidates(group, seed):
        if any(m.membership(x) for m in minimals):
            continue  # closure lies inside an already-found minimal normal
        k = x.key()
        if k not in closure_memo:
            closure_memo[k] = normal_closure(group, [x])
        c = _minimize_normal(group, closure_memo[k], seed, closure_memo)
        if not any(c.order() == m.order()
                   and all(m.membership(g) for g in c.generators)
                   for m in minimals):
            minimals.append(c)
    gens = [g for m in minimals for g in m.generators]
    return GeneratedGroup(group.degree, gens or [identity(group.degree)])


# ---------------------------------------------------------------------------
# Isomorphism testing
# ---------------------------------------------------------------------------


class IsoMap:
    """A certified isomorphism, stored as a full element map."""

    __slots__ = ("source", "target", "gen_images", "_table")

    def __init__(self, source, target, gen_images, table):
        self.source = source
        self.target = target
        self.gen_images = gen_images
        self._table = table  # dict: source element key -> target Permutation

    def apply(self, x: Permutation) -> Permutation:
        return self._table[x.key()]


def _bfs_words(group: GeneratedGroup, gens: list[Permutation], bound: int):
    """BFS enumeration of the group from `gens`: (keys, parent, parent_gen)."""
    ident = identity(group.degree)
    elems = [ident]
    index = {ident.key(): 0}
    parent = [-1]
    pgen = [-1]
    k = 0
    while k < len(elems):
        x = elems[k]
        for gi, g in enumerate(gens):
            y = x * g
            key = y.key()
            if key not in index:
                index[key] = len(elems)
                elems.append(y)
                parent.append(k)
                pgen.append(gi)
                if len(elems) > bound:
                    raise ScopeError("BFS enumeration exceeded the bound")
        k += 1
    return elems, index, parent, pgen


def _choose_generating_pair(group: GeneratedGroup, data: _ElementData):
    hist: dict[int, int] = {}
    for o in data.orders:
        hist[o] = hist.get(o, 0) + 1
    ranked = sorted(range(len(data.elements)),
                    key=lambda i: (hist[data.orders[i]], -data.orders[i],
                                   data.elements[i].key()))
    ranked = [i for i in ranked if data.orders[i] > 1]

    def central(x: Permutation) -> bool:
        return all((x * g) == (g * x) for g in group.generators)

    first = next((i for i in ranked if not central(data.elements[i])), None)
    if first is None:
        return None  # abelian
    g1 = data.elements[first]
    for j in ranked[:400]:
        if j == first:
            continue
        g2 = data.elements[j]
        cand = GeneratedGroup(group.degree, [g1, g2])
        if cand.order() == group.order():
            return [g1, g2]
    return None


_PROBE_WORDS = [(0, 1), (0, 1, 1), (0, 0, 1), (0, 1, 0, 1, 1), (1, 0, 0, 1, 1)]


def _word_order(gens, word) -> int:
    x = gens[word[0]]
    for i in word[1:]:
        x = x * gens[i]
    return x.order()


def _iso_search(a: GeneratedGroup, b: GeneratedGroup, cap: int,
                find_all: bool) -> list[IsoMap]:
    if a.order() != b.order():
        return []
    if a.order() > cap:
        raise ScopeError("isomorphism search exceeds the order cap")
    data_a = element_data(a, cap)
    data_b = element_data(b, cap)
    if order_histogram(a, cap) != order_histogram(b, cap):
        return []
    if a.order() == 1:
        m = IsoMap(a, b, [], {identity(a.degree).key(): identity(b.degree)})
        return [m]

    gens = _choose_generating_pair(a, data_a)
    if gens is None:
        # not 2-generated: greedily reduce the original generator list
        gens = []
        cur = trivial_group(a.degree)
        for g in a.generators:
            if not g.is_identity() and not cur.membership(g):
                gens.append(g)
                cur = GeneratedGroup(a.degree, list(gens))
                if cur.order() == a.order():
                    break
    elems, index, parent, pgen = _bfs_words(a, gens, cap + 1)
    if len(elems) != a.order():
        raise RuntimeError("generating set failed to reach the whole group")

    cls_b = data_b.conjugacy_classes(b)
    gen_orders = [g.order() for g in gens]
    probe_targets = [_word_order(gens, w) for w in _PROBE_WORDS if max(w) < len(gens)]
    probe_words = [w for w in _PROBE_WORDS if max(w) < len(gens)]

    # candidate images of gens[0]: one representative per conjugacy class
    seen_classes = set()
    h1_cands = []
    for i in data_b.by_order.get(gen_orders[0], []):
        c = cls_b[i]
        if c not in seen_classes:
            seen_classes.add(c)
            h1_cands.append(data_b.elements[i])

    found: list[IsoMap] = []
    centralizer_cache: dict[bytes, list[Permutation]] = {}

    def centralizer_of(h: Permutation) -> list[Permutation]:
        key = h.key()
        if key not in centralizer_cache:
            centralizer_cache[key] = [x for x in data_b.elements
                                      if (x * h) == (h * x)]
        return centralizer_cache[key]

    def verify(h_gens: list[Permutation]) -> IsoMap | None:
        ident_b = identity(b.degree)
        images: list[Permutation] = [ident_b] * len(elems)
        for i in range(1, len(elems)):
            images[i] = images[parent[i]] * h_gens[pgen[i]]
        table = {}
        for i, x in enumerate(elems):
            table[x.key()] = images[i]
        if len(set(im.key() for im in images)) != len(elems):
            return None
        for i, x in enumerate(elems):
            for gi, g in enumerate(gens):
                j = index[(x * g).key()]
                if not (images[i] * h_gens[gi]) == images[j]:
                    return None
        return IsoMap(a, b, list(h_gens), table)

    def already_inner(cand: IsoMap, h1: Permutation) -> bool:
        for m in found:
            if not m.gen_images[0] == h1:
                continue
            for c in centralizer_of(h1):
                cinv = c.inverse()
                if all((cinv * mg * c) == cg
                       for mg, cg in zip(m.gen_images, cand.gen_images)):
                    return True
        return False

    if len(gens) == 2:
        for h1 in h1_cands:
            for j in data_b.by_order.get(gen_orders[1], []):
                h2 = data_b.elements[j]
                hpair = [h1, h2]
                if any(_word_order(hpair, w) != t
                       for w, t in zip(probe_words, probe_targets)):
                    continue
                if GeneratedGroup(b.degree, hpair).order() != b.order():
                    continue
                m = verify(hpair)
                if m is None:
                    continue
                if find_all:
                    if not already_inner(m, h1):
                        found.append(m)
                else:
                    return [m]
    else:
        # fallback: exhaustive over image tuples with matching orders (small
        # groups only reach this path)
        pools = [data_b.by_order.get(o, []) for o in gen_orders]
        import itertools

        for combo in itertools.product(*pools):
            h_gens = [data_b.elements[i] for i in combo]
            if GeneratedGroup(b.degree, h_gens).order() != b.order():
                continue
            m = verify(h_gens)
            if m is not None:
                if find_all:
                    if not already_inner(m, h_gens[0]):
                        found.append(m)
                else:
                    return [m]
    return found


def are_isomorphic(a: GeneratedGroup, b: GeneratedGroup,
                   cap: int = ISO_ORDER_CAP) -> bool:
    return bool(_iso_search(a, b, cap, find_all=False))


def isomorphism(a: GeneratedGroup, b: GeneratedGroup,
                cap: int = ISO_ORDER_CAP) -> IsoMap | None:
    maps = _iso_search(a, b, cap, find_all=False)
    return maps[0] if maps else None


def isomorphism_class_reps(a: GeneratedGroup, b: GeneratedGroup,
                           cap: int = ISO_ORDER_CAP) -> list[IsoMap]:
    """All isomorphisms a -> b up to composition with inner automorphisms."""
    return _iso_search(a, b, cap, find_all=True)


# ---------------------------------------------------------------------------
# Naming small groups
# ---------------------------------------------------------------------------


def _direct_product(g: GeneratedGroup, h: GeneratedGroup) -> GeneratedGroup:
    d1, d2 = g.degree, h.degree
    gens = []
    for x in g.generators:
        gens.append(Permutation(np.concatenate([x.images,
                                                np.arange(d2, dtype=np.int32) + d1]),
                                _checked=True))
    for y in h.generators:
        gens.append(Permutation(np.concatenate([np.arange(d1, dtype=np.int32),
                                                y.images + d1]), _checked=True))
    return GeneratedGroup(d1 + d2, gens)


def _dihedral(order: int) -> GeneratedGroup:
    n = order // 2
    rot = from_cycles(n, [tuple(range(n))])
    ref = Permutation(np.array([(n - i) % n for i in range(n)], dtype=np.int32))
    return GeneratedGroup(n, [rot, ref], name=f"D_{order}")


def _quaternion8() -> GeneratedGroup:
    i = from_cycles(8, [(0, 1, 2, 3), (4, 7, 6, 5)])
    j = from_cycles(8, [(0, 4, 2, 6), (1, 5, 3, 7)])
    return GeneratedGroup(8, [i, j], name="Q_8")


@lru_cache(maxsize=1)
def _name_library() -> tuple:
    from .catalog import build_affine, build_alt, build_psl2, build_sym, sl_matrices

    lib: list[tuple[str, object]] = []
    for n in range(3, 9):
        lib.append((f"S_{n}", lambda n=n: build_sym(n)))
    for n in range(4, 10):
        lib.append((f"A_{n}", lambda n=n: build_alt(n)))
    lib.append(("Q_8", _quaternion8))
    lib.append(("SL_2(3)", lambda: _linear(3, 2, False)))
    lib.append(("GL_2(3)", lambda: _linear(3, 2, True)))
    lib.append(("SL_2(5)", lambda: _linear(5, 2, False)))
    lib.append(("SL_2(13)", lambda: _linear(13, 2, False)))
    lib.append(("PSL_2(7)", lambda: build_psl2(7)))
    lib.append(("PSL_2(11)", lambda: build_psl2(11)))
    lib.append(("2 x S_4", lambda: _direct_product(build_sym(2), build_sym(4))))
    lib.append(("S_4 x S_3", lambda: _direct_product(build_sym(4), build_sym(3))))
    lib.append(("(S_4 x S_4).2", _s4wr2))
    lib.append(("2^3:SL_3(2)", lambda: build_affine(2, 3, sl_matrices(3, 2))))
    lib.append(("2^4:A_5", lambda: _file_affine("sl2_4_gl42")))
    return tuple(lib)


def _file_affine(name: str) -> GeneratedGroup:
    from .catalog import build_affine, load_matrix_file

    p, d, mats = load_matrix_file(name)
    return build_affine(p, d, mats)


def _linear(p: int, n: int, general: bool) -> GeneratedGroup:
    from .catalog import gl_matrices, linear_part_group, sl_matrices

    mats = gl_matrices(n, p) if general else sl_matrices(n, p)
    return linear_part_group(p, n, mats)


def _s4wr2() -> GeneratedGroup:
    from .catalog import build_sym

    s4a = build_sym(4)
    prod = _direct_product(s4a, build_sym(4))
    swap = Permutation(np.array([4, 5, 6, 7, 0, 1, 2, 3], dtype=np.int32))
    return GeneratedGroup(8, list(prod.generators) + [swap])


def name_group(group: GeneratedGroup, cap: int = ISO_ORDER_CAP) -> str:
    """Structural name of a small group, or a generic order tag."""
    from .arith import factorize

    order = group.order()
    if order == 1:
        return "1"
    if order <= cap:
        data = element_data(group, cap)
        if max(data.orders) == order:
            return f"Z_{order}"
        fac = factorize(order)
        if len(fac) == 1:
            p = next(iter(fac))
            if all(o in (1, p) for o in data.orders):
                return f"Z_{p}^{fac[p]}"
        if order % 2 == 0 and order >= 6:
            dih = _dihedral(order)
            if order_histogram(dih) == order_histogram(group) and \
                    are_isomorphic(dih, group, cap):
                return "S_3" if order == 6 else f"D_{order}"
        for name, make in _name_library():
            cand = make()
            if cand.order() != order:
                continue
            if order_histogram(cand) != order_histogram(group):
                continue
            if are_isomorphic(cand, group, cap):
                return name
    return f"group of order {order}"


LABEL_ALIASES = {
    "D_6": "S_3", "GL_3(2)": "PSL_2(7)", "SL_3(2)": "PSL_2(7)",
    "SL_4(2)": "A_8", "Sp_4(2)": "S_6", "SL_2(4)": "A_5", "SigmaL_2(4)": "S_5",
    "D_4": "Z_2^2", "Z_2 x Z_2": "Z_2^2", "(S_4 x S_4).2": "(S_4 x S_4).2",
    "2^3:GL_3(2)": "2^3:SL_3(2)", "Z_6": "Z_6", "2xS_4": "2 x S_4",
}


def labels_match(computed: str, expected: str) -> bool:
    canon = LABEL_ALIASES.get
    return canon(computed, computed) == canon(expected, expected)
