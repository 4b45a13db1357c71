#!/usr/bin/env python3
"""Generate the frozen catalog data files.

Subcommands:
  matrices  - locate linear parts by deterministic seeded search and freeze
              them under src/amalgamlab/data/catalog/matrices/
  entries   - write entries.json (descriptors for every catalog entry)
  golden    - write the golden reference tables used by the CLI and tests
  all       - everything

Searches are deterministic: candidate generators are scanned in sorted order
(or drawn from a fixed-seed RNG), so reruns reproduce the same files.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import random
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from amalgamlab.catalog import (  # noqa: E402
    DATA_DIR,
    build_affine,
    build_sp_2,
    gl_order,
    linear_part_group,
    nonzero_linear_perm,
    save_matrix_file,
    sl_matrices,
    sl_order,
    sp_transvection_matrices,
    vector_table,
)
from amalgamlab.gf import SmallField, is_invertible, mat_mul, mat_order, nullspace  # noqa: E402
from amalgamlab.permcore import GeneratedGroup  # noqa: E402


# ---------------------------------------------------------------------------
# matrix search helpers
# ---------------------------------------------------------------------------


def all_gl2_elements(p: int) -> list[np.ndarray]:
    out = []
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p:
            out.append(np.array([[a, b], [c, d]], dtype=np.int64))
    out.sort(key=lambda m: tuple(m.reshape(-1)))
    return out


def mat_key(p, m):
    return tuple(int(x) for x in np.asarray(m).reshape(-1) % p)


def mulclose_mats(p, gens, cap):
    eye = np.eye(gens[0].shape[0], dtype=np.int64)
    els = {mat_key(p, eye): eye}
    frontier = [eye]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = mat_mul(p, a, g)
                k = mat_key(p, c)
                if k not in els:
                    els[k] = c
                    new.append(c)
                    if len(els) > cap:
                        return None
        frontier = new
    return list(els.values())


def order_hist_mats(p, els):
    h = {}
    for m in els:
        o = mat_order(p, m, cap=20000)
        h[o] = h.get(o, 0) + 1
    return tuple(sorted(h.items()))


def is_fpf(p, m):
    """No nonzero fixed vector: 1 is not an eigenvalue."""
    d = m.shape[0]
    return nullspace(p, (m - np.eye(d, dtype=np.int64)) % p).shape[0] == 0


def transitive_on_nonzero(p, d, mats) -> bool:
    g = GeneratedGroup(p**d - 1, [nonzero_linear_perm(p, d, m) for m in mats])
    return g.is_transitive()


def search_pair(p, dim, pool_a, pool_b, target_order, target_hist, require_fpf=False,
                require_transitive=True, label=""):
    for a in pool_a:
        for b in pool_b:
            cl = mulclose_mats(p, [a, b], target_order)
            if cl is None or len(cl) != target_order:
                continue
            if require_fpf and not all(is_fpf(p, m) for m in cl if not (m == np.eye(dim, dtype=np.int64)).all()):
                continue
            if order_hist_mats(p, cl) != target_hist:
                continue
            if require_transitive and not transitive_on_nonzero(p, dim, [a, b]):
                continue
            print(f"  found {label}: |G|={target_order}")
            return [a, b]
    raise RuntimeError(f"search failed for {label}")


# reference order histograms, computed from the defining copies
def hist_of_group(g: GeneratedGroup, bound=10**5):
    h = {}
    for x in g.elements(bound):
        o = x.order()
        h[o] = h.get(o, 0) + 1
    return tuple(sorted(h.items()))


def gen_matrices(force: bool) -> None:
    mdir = DATA_DIR / "matrices"
    mdir.mkdir(parents=True, exist_ok=True)

    def want(name):
        return force or not (mdir / f"{name}.json").exists()

    # reference fingerprints from natural copies
    sl23_nat = linear_part_group(3, 2, sl_matrices(2, 3))
    HIST_SL23 = hist_of_group(sl23_nat)
    sl25_nat = linear_part_group(5, 2, sl_matrices(2, 5))
    HIST_SL25 = hist_of_group(sl25_nat)
    print("SL_2(3) hist:", HIST_SL23)
    print("SL_2(5) hist:", HIST_SL25)

    if want("sl2_3_gf5"):
        els = all_gl2_elements(5)
        ords = {mat_key(5, m): mat_order(5, m) for m in els}
        pool6 = [m for m in els if ords[mat_key(5, m)] == 6 and is_fpf(5, m)]
        pool4 = [m for m in els if ords[mat_key(5, m)] == 4 and is_fpf(5, m)]
        mats = search_pair(5, 2, pool6, pool4, 24, HIST_SL23, require_fpf=True,
                           label="SL_2(3) < GL_2(5)")
        save_matrix_file("sl2_3_gf5", 5, 2, mats,
                         "SL_2(3) regular on the 24 nonzero vectors of GF(5)^2")

    if want("q8_6_gf5"):
        # the unique transitive order-48 class at 5^2 that is Q8-based:
        # histogram ((1,1),(2,7),(3,8),(4,8),(6,8),(12,16)), centre of order 4
        target = ((1, 1), (2, 7), (3, 8), (4, 8), (6, 8), (12, 16))
        els = all_gl2_elements(5)
        ords = {mat_key(5, m): mat_order(5, m) for m in els}
        pool12 = [m for m in els if ords[mat_key(5, m)] == 12]
        pool4 = [m for m in els if ords[mat_key(5, m)] == 4]
        mats = search_pair(5, 2, pool12, pool4, 48, target, label="Q8.6 < GL_2(5)")
        save_matrix_file("q8_6_gf5", 5, 2, mats,
                         "Q8.6 = SL_2(3).4 (centre Z_4), transitive on GF(5)^2 nonzero")

    if want("q8_s3_gf7"):
        # binary octahedral group: unique involution, regular on 48 vectors
        target = ((1, 1), (2, 1), (3, 8), (4, 18), (6, 8), (8, 12))
        els = all_gl2_elements(7)
        ords = {mat_key(7, m): mat_order(7, m) for m in els}
        pool8 = [m for m in els if ords[mat_key(7, m)] == 8 and is_fpf(7, m)]
        pool3 = [m for m in els if ords[mat_key(7, m)] == 3 and is_fpf(7, m)]
        mats = search_pair(7, 2, pool8, pool3, 48, target, require_fpf=True,
                           label="Q8.S3 (2O) < GL_2(7)")
        save_matrix_file("q8_s3_gf7", 7, 2, mats,
                         "Q8.S3 (binary octahedral), regular on GF(7)^2 nonzero")

    if want("c3xq16_gf7"):
        target = ((1, 1), (2, 1), (3, 2), (4, 10), (6, 2), (8, 4), (12, 20), (24, 8))
        els = all_gl2_elements(7)
        ords = {mat_key(7, m): mat_order(7, m) for m in els}
        pool24 = [m for m in els if ords[mat_key(7, m)] == 24 and is_fpf(7, m)]
        pool4 = [m for m in els if ords[mat_key(7, m)] == 4 and is_fpf(7, m)]
        mats = search_pair(7, 2, pool24, pool4, 48, target, require_fpf=True,
                           label="3 x Q16 < GL_2(7)")
        save_matrix_file("c3xq16_gf7", 7, 2, mats,
                         "3 x Q8.2 = C3 x Q16, regular on GF(7)^2 nonzero")

    if want("sl2_5_gf11"):
        rng = random.Random(11)
        base = sl_matrices(2, 11)
        sl11 = mulclose_mats(11, base, 1400)
        assert len(sl11) == 1320
        ords = {mat_key(11, m): mat_order(11, m) for m in sl11}
        pool10 = sorted([m for m in sl11 if ords[mat_key(11, m)] == 10 and is_fpf(11, m)],
                        key=lambda m: mat_key(11, m))
        pool4 = sorted([m for m in sl11 if ords[mat_key(11, m)] == 4 and is_fpf(11, m)],
                       key=lambda m: mat_key(11, m))
        mats = search_pair(11, 2, pool10[:20], pool4, 120, HIST_SL25, require_fpf=True,
                           label="SL_2(5) < SL_2(11)")
        save_matrix_file("sl2_5_gf11", 11, 2, mats,
                         "SL_2(5) regular on the 120 nonzero vectors of GF(11)^2")

    if want("a7_gl42"):
        # A_7 inside GL_4(2) = A_8, transitive on the 15 nonzero vectors
        rng = random.Random(42)
        found = None
        for attempt in range(20000):
            a = np.array([[rng.randrange(2) for _ in range(4)] for _ in range(4)], dtype=np.int64)
            b = np.array([[rng.randrange(2) for _ in range(4)] for _ in range(4)], dtype=np.int64)
            if not (is_invertible(2, a) and is_invertible(2, b)):
                continue
            cl = mulclose_mats(2, [a, b], 2520)
            if cl is not None and len(cl) == 2520:
                if transitive_on_nonzero(2, 4, [a, b]):
                    found = [a, b]
                    print(f"  found A_7 < GL_4(2) after {attempt + 1} attempts")
                    break
        if found is None:
            raise RuntimeError("A_7 search failed")
        save_matrix_file("a7_gl42", 2, 4, found,
                         "A_7 < GL_4(2), transitive on the 15 nonzero vectors")

    if want("a6_gl42"):
        # A_6 = derived subgroup of Sp_4(2); matrices recovered from the
        # permutation action on the 16 vectors
        from amalgamlab.permcore import derived_subgroup

        sp4 = linear_part_group(2, 4, sp_transvection_matrices(4))
        assert sp4.order() == 720
        der = derived_subgroup(sp4)
        assert der.order() == 360
        vt = vector_table(2, 4)
        mats = []
        for g in der.generators:
            rows = [vt[g(int(2**i))] for i in range(4)]  # image of basis vector e_i
            mats.append(np.array(rows, dtype=np.int64))
        grp = linear_part_group(2, 4, mats)
        assert grp.order() == 360
        assert transitive_on_nonzero(2, 4, mats)
        save_matrix_file("a6_gl42", 2, 4, mats,
                         "A_6 = Sp_4(2)', transitive on the 15 nonzero vectors")

    if want("sl2_4_gl42") or want("sigmal2_4_gl42"):
        # SL_2(4) over GF(4) rewritten as 4x4 matrices over GF(2), plus the
        # field automorphism for SigmaL_2(4) = S_5
        F = SmallField(2, 2)

        def blow(fn):
            # basis of GF(4)^2 over GF(2): (1,0), (w,0), (0,1), (0,w)
            basis = [(1, 0), (2, 0), (0, 1), (0, 2)]
            rows = []
            for v in basis:
                w = fn(v)
                row = F.as_vector(w[0]) + F.as_vector(w[1])
                rows.append(row)
            return np.array(rows, dtype=np.int64)

        def mat_gf4(m):
            return lambda v: (
                F.add(F.mul(v[0], m[0][0]), F.mul(v[1], m[1][0])),
                F.add(F.mul(v[0], m[0][1]), F.mul(v[1], m[1][1])),
            )

        w = F.generator
        w2 = F.mul(w, w)
        gens4 = [[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[w, 0], [0, w2]]]
        mats = [blow(mat_gf4(m)) for m in gens4]
        grp = linear_part_group(2, 4, mats)
        assert grp.order() == 60, grp.order()
        assert transitive_on_nonzero(2, 4, mats)
        save_matrix_file("sl2_4_gl42", 2, 4, mats,
                         "SL_2(4) = A_5 over GF(2), transitive on 15 nonzero vectors")
        frob = blow(lambda v: (F.frobenius(v[0]), F.frobenius(v[1])))
        mats_s = mats + [frob]
        grp_s = linear_part_group(2, 4, mats_s)
        assert grp_s.order() == 120, grp_s.order()
        save_matrix_file("sigmal2_4_gl42", 2, 4, mats_s,
                         "SigmaL_2(4) = S_5 over GF(2), transitive on 15 nonzero vectors")

    if want("sl2_13_gf3_dim6"):
        mats = find_sl2_13_dim6()
        save_matrix_file("sl2_13_gf3_dim6", 3, 6, mats,
                         "SL_2(13) < GL_6(3), transitive on the 728 nonzero vectors")

    print("matrix data complete")


def find_sl2_13_dim6() -> list[np.ndarray]:
    """Locate SL_2(13) < GL_6(3) via its Borel structure.

    An order-13 element acts with two 3-dimensional rational blocks; the
    torus normaliser conjugates it to its 4th power, and a Weyl-type element
    inverts the torus.  Both are solutions of small linear systems over GF(3).
    """
    p = 3

    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return out

    def poly_divmod(a, b):
        a = list(a)
        q = [0] * (len(a) - len(b) + 1)
        inv_lead = pow(b[-1], p - 2, p)
        for i in range(len(a) - len(b), -1, -1):
            c = a[i + len(b) - 1] * inv_lead % p
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
        return q, a[: len(b) - 1]

    # cubic irreducible factors of x^13 - 1 over GF(3)
    x13 = [0] * 14
    x13[0], x13[13] = (-1) % p, 1
    cubics = []
    for c0, c1, c2 in itertools.product(range(p), repeat=3):
        f = [c0, c1, c2, 1]
        if c0 == 0:
            continue
        if any((c0 + c1 * r + c2 * r * r + r**3) % p == 0 for r in range(p)):
            continue  # reducible: has a root
        _, rem = poly_divmod(x13, f)
        if all(v == 0 for v in rem):
            cubics.append(f)
    assert len(cubics) == 4, cubics

    def companion(f):
        m = np.zeros((3, 3), dtype=np.int64)
        for i in range(2):
            m[i, i + 1] = 1
        for j in range(3):
            m[2, j] = (-f[j]) % p
        return m

    eye6 = np.eye(6, dtype=np.int64)

    for f1, f2 in itertools.combinations(cubics, 2):
        A = np.zeros((6, 6), dtype=np.int64)
        A[:3, :3] = companion(f1)
        A[3:, 3:] = companion(f2)
        if mat_order(p, A) != 13:
            continue
        A4 = np.linalg.matrix_power(A, 4) % p

        # D A D^-1 = A^4  <=>  D A - A^4 D = 0
        sysm = np.kron(eye6, A.T) - np.kron(A4, eye6)
        basis = nullspace(p, sysm % p)
        if basis.shape[0] == 0:
            continue
        D = None
        for coeffs in itertools.product(range(p), repeat=basis.shape[0]):
            if not any(coeffs):
                continue
            X = sum(c * b for c, b in zip(coeffs, basis)).reshape(6, 6) % p
            if not is_invertible(p, X):
                continue
            if mat_order(p, X, cap=200) == 12 and ((np.linalg.matrix_power(X, 6) % p) == (-eye6) % p).all():
                D = X
                break
        if D is None:
            continue

        Dinv = np.linalg.matrix_power(D, 11) % p
        sysm2 = np.kron(eye6, D.T) - np.kron(Dinv, eye6)
        basis2 = nullspace(p, sysm2 % p)
        if basis2.shape[0] == 0 or basis2.shape[0] > 8:
            continue
        minus = (-eye6) % p
        for coeffs in itertools.product(range(p), repeat=basis2.shape[0]):
            if not any(coeffs):
                continue
            Y = sum(c * b for c, b in zip(coeffs, basis2)).reshape(6, 6) % p
            if not is_invertible(p, Y):
                continue
            if not ((mat_mul(p, Y, Y)) == minus).all():
                continue
            # permutation check: order 2184, transitive on nonzero vectors
            try:
                perms = [nonzero_linear_perm(p, 6, m) for m in (A, D, Y)]
            except ValueError:
                continue
            g = GeneratedGroup(728, perms)
            if g.order() == 2184 and g.is_transitive():
                print("  found SL_2(13) < GL_6(3)")
                return [A, D, Y]
    raise RuntimeError("SL_2(13) < GL_6(3) search failed")


# ---------------------------------------------------------------------------
# entries.json
# ---------------------------------------------------------------------------


def fact(n):
    return math.factorial(n)


def _entry(id, family, degree, socle, glabel, gorder, slabel, sorder, tlabel, torder,
           construction, table, row, option=None, notes=()):
    prov = {"table": table, "row": row}
    if option is not None:
        prov["option"] = option
    e = {"id": id, "family": family, "degree": degree, "socle": socle,
         "group_label": glabel, "group_order": gorder,
         "stab_label": slabel, "stab_order": sorder,
         "two_point_label": tlabel, "two_point_order": torder,
         "provenance": prov}
    if construction is not None:
        e["construction"] = construction
    if notes:
        e["notes"] = list(notes)
    return e


def gen_entries() -> None:
    E = []
    AS, AF = "almost-simple", "affine"

    # alternating and symmetric groups, natural actions
    for n in range(5, 10):
        E.append(_entry(f"A{n}@{n}", AS, n, f"A_{n}", f"A_{n}", fact(n) // 2,
                        f"A_{n-1}", fact(n - 1) // 2, f"A_{n-2}", fact(n - 2) // 2,
                        {"kind": "alt", "n": n}, AS, 1))
        E.append(_entry(f"S{n}@{n}", AS, n, f"A_{n}", f"S_{n}", fact(n),
                        f"S_{n-1}", fact(n - 1), f"S_{n-2}", fact(n - 2),
                        {"kind": "sym", "n": n}, AS, 1))

    # projective lines
    E.append(_entry("PSL2_7@8", AS, 8, "PSL_2(7)", "PSL_2(7)", 168, "7:3", 21,
                    "Z_3", 3, {"kind": "psl2", "q": 7}, AS, 2))
    E.append(_entry("PSL2_11@12", AS, 12, "PSL_2(11)", "PSL_2(11)", 660, "11:5", 55,
                    "Z_5", 5, {"kind": "psl2", "q": 11}, AS, 2))
    E.append(_entry("PSL2_11@11", AS, 11, "PSL_2(11)", "PSL_2(11)", 660, "A_5", 60,
                    "S_3", 6, {"kind": "psl2_exceptional"}, AS, 8))

    # symplectic form actions
    E.append(_entry("Sp6_2@28", AS, 28, "Sp_6(2)", "Sp_6(2)", 1451520,
                    "O_6^-(2) = U_4(2).2", 51840, "2^4:O_4^-(2)", 1920,
                    {"kind": "sp6_2", "type": "minus"}, AS, 6))
    E.append(_entry("Sp6_2@36", AS, 36, "Sp_6(2)", "Sp_6(2)", 1451520,
                    "O_6^+(2) = S_8", 40320, "2^4:O_4^+(2) = (S_4 x S_4).2", 1152,
                    {"kind": "sp6_2", "type": "plus"}, AS, 7))

    # A_7 on the 15 nonzero vectors of GF(2)^4
    E.append(_entry("A7@15", AS, 15, "A_7", "A_7", 2520, "PSL_2(7)", 168,
                    "A_4", 12,
                    {"kind": "nonzero_linear", "p": 2, "dim": 4, "linear": "file:a7_gl42"},
                    AS, 12))

    # descriptor-only almost simple rows
    E.append(_entry("Sz8@65", AS, 65, "Sz(8)", "Sz(8)", 29120, "[8^2]:7", 448,
                    "Z_7", 7, None, AS, 3))
    ree_order = 19683 * 19684 * 26
    E.append(_entry("Ree27@19684", AS, 19684, "Ree(27)", "Ree(27)", ree_order,
                    "[27^3]:26", 19683 * 26, "Z_26", 26, None, AS, 4))
    E.append(_entry("PSU3_3@28", AS, 28, "PSU_3(3)", "PSU_3(3)", 6048,
                    "[27]:8", 216, "Z_8", 8, None, AS, 5))
    E.append(_entry("M11@11", AS, 11, "M_11", "M_11", 7920, "M_10", 720,
                    "3^2:Q_8", 72, None, AS, 9))
    E.append(_entry("M11@12", AS, 12, "M_11", "M_11", 7920, "PSL_2(11)", 660,
                    "A_5", 60, None, AS, 10))
    E.append(_entry("M12@12", AS, 12, "M_12", "M_12", 95040, "M_11", 7920,
                    "M_10", 720, None, AS, 11))
    E.append(_entry("M22@22", AS, 22, "M_22", "M_22", 443520, "PSL_3(4)", 20160,
                    "2^4:A_5", 960, None, AS, 13))
    E.append(_entry("M23@23", AS, 23, "M_23", "M_23", 10200960, "M_22", 443520,
                    "PSL_3(4)", 20160, None, AS, 14))
    E.append(_entry("M24@24", AS, 24, "M_24", "M_24", 244823040, "M_23", 10200960,
                    "M_22", 443520, None, AS, 15))
    E.append(_entry("PSL2_8@28", AS, 28, "PSL_2(8)", "PGammaL_2(8)", 1512,
                    "D_18.3", 54, "Z_2", 2, None, AS, 16,
                    notes=["dihedral groups are named by order: D_18 has 18 elements"]))
    E.append(_entry("HS@176", AS, 176, "HS", "HS", 44352000, "PSU_3(5).2", 252000,
                    "A_6.2^2", 1440, None, AS, 17))
    E.append(_entry("Co3@276", AS, 276, "Co_3", "Co_3", 495766656000,
                    "McL.2", 1796256000, "PSU_4(3).2", 6531840, None, AS, 18))

    # affine: natural-characteristic linear groups (row 1)
    def aff(id, p, d, linear, slabel, sorder, tlabel, torder, table_row, option=None,
            notes=()):
        deg = p**d
        return _entry(id, AF, deg, f"{p}^{d}", f"{p}^{d}:{slabel}", deg * sorder,
                      slabel, sorder, tlabel, torder,
                      {"kind": "affine", "p": p, "dim": d, "linear": linear},
                      AF, table_row, option, notes)

    E.append(aff("3^2:SL2_3@9", 3, 2, "sl", "SL_2(3)", 24, "Z_3", 3, 1))
    E.append(aff("3^2:GL2_3@9", 3, 2, "gl", "GL_2(3)", 48, "S_3", 6, 1))
    E.append(aff("5^2:SL2_5@25", 5, 2, "sl", "SL_2(5)", 120, "Z_5", 5, 1))
    E.append(aff("13^2:SL2_13@169", 13, 2, "sl", "SL_2(13)", 2184, "Z_13", 13, 1))
    E.append(aff("2^3:SL3_2@8", 2, 3, "sl", "SL_3(2)", 168, "S_4", 24, 1))
    E.append(aff("2^4:SL4_2@16", 2, 4, "sl", "SL_4(2) = A_8", 20160,
                 "2^3:SL_3(2)", 1344, 1))
    E.append(aff("2^4:SL2_4@16", 2, 4, "file:sl2_4_gl42", "SL_2(4) = A_5", 60,
                 "Z_2^2", 4, 1))
    E.append(aff("2^4:SigmaL2_4@16", 2, 4, "file:sigmal2_4_gl42",
                 "SigmaL_2(4) = S_5", 120, "D_8", 8, 1))
    E.append(aff("2^4:Sp4_2@16", 2, 4, "sp", "Sp_4(2) = S_6", 720, "2 x S_4", 48, 2))
    E.append(_entry("2^6:G2_2@64", AF, 64, "2^6", "2^6:G_2(2)", 64 * 12096,
                    "G_2(2)", 12096, "[32]:GL_2(2)", 192, None, AF, 3))

    # affine, 5^2 (Q8 family)
    E.append(aff("5^2:SL2_3@25", 5, 2, "file:sl2_3_gf5", "Q8:3 = SL_2(3)", 24,
                 "1", 1, 4, option=1))
    E.append(aff("5^2:Q8.6@25", 5, 2, "file:q8_6_gf5", "Q8.6", 48, "Z_2", 2, 4,
                 option=2,
                 notes=["Q8.6 = SL_2(3).4 with centre Z_4; it is not isomorphic "
                        "to GL_2(3), which has 13 involutions against 7 here"]))
    E.append(_entry("5^2:Q8.3_4@25", AF, 25, "5^2", "5^2:(Q8:3).4", 25 * 96,
                    "(Q8:3).4", 96, "[4]", 4, None, AF, 4, option=3))

    # affine, 7^2
    E.append(aff("7^2:Q8.S3@49", 7, 2, "file:q8_s3_gf7", "Q8.S3", 48, "1", 1, 5,
                 option=1,
                 notes=["binary octahedral group (unique involution); regular on "
                        "the 48 nonzero vectors, hence not isomorphic to GL_2(3)"]))
    E.append(aff("7^2:3xQ16@49", 7, 2, "file:c3xq16_gf7", "3 x Q8.2", 48, "1", 1, 5,
                 option=2))
    E.append(_entry("7^2:3xQ8.S3@49", AF, 49, "7^2", "7^2:(3 x Q8.S3)", 49 * 144,
                    "3 x Q8.S3", 144, "Z_3", 3, None, AF, 5, option=3))

    # affine, 11^2 / 23^2 (Q8 family, descriptor-only)
    E.append(_entry("11^2:5xSL2_3@121", AF, 121, "11^2", "11^2:(5 x Q8:3)", 121 * 120,
                    "5 x Q8:3", 120, "1", 1, None, AF, 6, option=1))
    E.append(_entry("11^2:5xQ8.S3@121", AF, 121, "11^2", "11^2:(5 x Q8.S3)", 121 * 240,
                    "5 x Q8.S3", 240, "Z_2", 2, None, AF, 6, option=2))
    E.append(_entry("23^2:11xQ8.S3@529", AF, 529, "23^2", "23^2:(11 x Q8.S3)",
                    529 * 528, "11 x Q8.S3", 528, "1", 1, None, AF, 7))

    # affine, 3^4 extraspecial rows (descriptor-only)
    x34 = [("2^{1+4}:5", 160, "Z_2", 2), ("2^{1+4}:D_10", 320, "[4]", 4),
           ("2^{1+4}:(5:4)", 640, "[8]", 8), ("2^{1+4}:A_5", 1920, "2.A_4", 24),
           ("2^{1+4}:S_5", 3840, "2.S_4", 48)]
    for i, (lab, so, tl, to) in enumerate(x34, start=1):
        E.append(_entry(f"3^4:{lab}@81", AF, 81, "3^4", f"3^4:{lab}", 81 * so,
                        lab, so, tl, to, None, AF, 8, option=i,
                        notes=["stabiliser and two-point options aligned positionally"]))

    # affine, SL_2(13) and A_6/A_7 modules
    E.append(aff("3^6:SL2_13@729", 3, 6, "file:sl2_13_gf3_dim6", "SL_2(13)", 2184,
                 "Z_3", 3, 9))
    E.append(aff("2^4:A6@16", 2, 4, "file:a6_gl42", "A_6", 360, "S_4", 24, 10))
    E.append(aff("2^4:A7@16", 2, 4, "file:a7_gl42", "A_7", 2520, "PSL_2(7)", 168, 11))
    E.append(_entry("2^6:PSU3_3@64", AF, 64, "2^6", "2^6:PSU_3(3)", 64 * 6048,
                    "PSU_3(3)", 6048, "4.S_4", 96, None, AF, 12,
                    notes=["source lists two-point options 4.S_4 and 4^2.S_3, both "
                           "of order 96"]))

    # affine, SL_2(5) family
    E.append(aff("11^2:SL2_5@121", 11, 2, "file:sl2_5_gf11", "SL_2(5)", 120,
                 "1", 1, 13, option=1))
    E.append(_entry("11^2:5xSL2_5@121", AF, 121, "11^2", "11^2:(5 x SL_2(5))",
                    121 * 600, "5 x SL_2(5)", 600, "Z_5", 5, None, AF, 13, option=2))
    E.append(_entry("19^2:9xSL2_5@361", AF, 361, "19^2", "19^2:(9 x SL_2(5))",
                    361 * 1080, "9 x SL_2(5)", 1080, "Z_3", 3, None, AF, 14))
    E.append(_entry("29^2:7xSL2_5@841", AF, 841, "29^2", "29^2:(7 x SL_2(5))",
                    841 * 840, "7 x SL_2(5)", 840, "1", 1, None, AF, 15, option=1))
    E.append(_entry("29^2:7x4oSL2_5@841", AF, 841, "29^2", "29^2:(7 x (4 o SL_2(5)))",
                    841 * 1680, "7 x (4 o SL_2(5))", 1680, "Z_2", 2, None, AF, 15,
                    option=2))
    E.append(_entry("59^2:29xSL2_5@3481", AF, 3481, "59^2", "59^2:(29 x SL_2(5))",
                    3481 * 3480, "29 x SL_2(5)", 3480, "1", 1, None, AF, 16))

    # one-dimensional semilinear representative
    E.append(_entry("2^3:GammaL1_8@8", AF, 8, "2^3", "2^3:GammaL_1(8)", 168,
                    "7:3", 21, "Z_3", 3,
                    {"kind": "gamma_l1", "p": 2, "k": 3}, AF, "gamma-l1"))

    # sanity: 2-transitive order chains
    for e in E:
        assert e["group_order"] == e["degree"] * e["stab_order"], e["id"]
        assert e["stab_order"] == (e["degree"] - 1) * e["two_point_order"], e["id"]

    ids = [e["id"] for e in E]
    assert len(ids) == len(set(ids))
    out = {"entries": E}
    with open(DATA_DIR / "entries.json", "w") as fh:
        json.dump(out, fh, indent=1)
        fh.write("\n")
    print(f"wrote {len(E)} entries")


# ---------------------------------------------------------------------------
# golden tables
# ---------------------------------------------------------------------------


def gen_golden() -> None:
    gdir = DATA_DIR.parent / "golden"
    gdir.mkdir(parents=True, exist_ok=True)

    rows = [
        dict(row=1, gv="3^2:SL_2(3)", gw="5^2:SL_2(3)", gvw="SL_2(3)",
             ov=216, ow=600, ovw=24, dv=9, dw=25,
             col_left=("Z_3", 3), col_right=("1", 1),
             left="3^2:SL2_3@9", right="5^2:SL2_3@25"),
        dict(row=2, gv="3^2:GL_2(3)", gw="5^2:GL_2(3)", gvw="GL_2(3)",
             ov=432, ow=1200, ovw=48, dv=9, dw=25,
             col_left=("S_3", 6), col_right=("Z_2", 2),
             left="3^2:GL2_3@9", right=None),
        dict(row=3, gv="3^2:GL_2(3)", gw="7^2:GL_2(3)", gvw="GL_2(3)",
             ov=432, ow=2352, ovw=48, dv=9, dw=49,
             col_left=("S_3", 6), col_right=("1", 1),
             left="3^2:GL2_3@9", right=None),
        dict(row=4, gv="5^2:GL_2(3)", gw="7^2:GL_2(3)", gvw="GL_2(3)",
             ov=1200, ow=2352, ovw=48, dv=25, dw=49,
             col_left=("Z_2", 2), col_right=("1", 1),
             left=None, right=None),
        dict(row=5, gv="A_6", gw="PSL_2(11)", gvw="A_5",
             ov=360, ow=660, ovw=60, dv=6, dw=11,
             col_left=("A_4", 12), col_right=("D_6", 6),
             left="A6@6", right="PSL2_11@11"),
        dict(row=6, gv="PSL_2(11)", gw="2^4:A_5", gvw="A_5",
             ov=660, ow=960, ovw=60, dv=11, dw=16,
             col_left=("D_6", 6), col_right=("Z_2^2", 4),
             left="PSL2_11@11", right="2^4:SL2_4@16"),
        dict(row=7, gv="A_6", gw="2^4.A_5", gvw="A_5",
             ov=360, ow=960, ovw=60, dv=6, dw=16,
             col_left=("A_4", 12), col_right=("Z_2^2", 4),
             left="A6@6", right="2^4:SL2_4@16"),
        dict(row=8, gv="S_6", gw="2^4.S_5", gvw="S_5",
             ov=720, ow=1920, ovw=120, dv=6, dw=16,
             col_left=("S_4", 24), col_right=("D_8", 8),
             left="S6@6", right="2^4:SigmaL2_4@16"),
        dict(row=9, gv="A_7", gw="2^4.A_6", gvw="A_6",
             ov=2520, ow=5760, ovw=360, dv=7, dw=16,
             col_left=("A_5", 60), col_right=("S_4", 24),
             left="A7@7", right="2^4:A6@16"),
        dict(row=10, gv="S_7", gw="2^4.S_6", gvw="S_6",
             ov=5040, ow=11520, ovw=720, dv=7, dw=16,
             col_left=("S_5", 120), col_right=("2 x S_4", 48),
             left="S7@7", right="2^4:Sp4_2@16"),
        dict(row=11, gv="A_8", gw="2^4.A_7", gvw="A_7",
             ov=20160, ow=40320, ovw=2520, dv=8, dw=16,
             col_left=("A_6", 360), col_right=("PSL_2(7)", 168),
             left="A8@8", right="2^4:A7@16"),
        dict(row=12, gv="A_9", gw="2^4.A_8", gvw="A_8",
             ov=181440, ow=322560, ovw=20160, dv=9, dw=16,
             col_left=("A_7", 2520), col_right=("2^3:SL_3(2)", 1344),
             left="A9@9", right="2^4:SL4_2@16"),
        dict(row=13, gv="S_9", gw="Sp_6(2)", gvw="S_8",
             ov=362880, ow=1451520, ovw=40320, dv=9, dw=36,
             col_left=("S_7", 5040), col_right=("(S_4 x S_4).2", 1152),
             left="S9@9", right="Sp6_2@36"),
        dict(row=14, gv="A_7", gw="2^3:SL_3(2)", gvw="PSL_2(7)",
             ov=2520, ow=1344, ovw=168, dv=15, dw=8,
             col_left=("A_4", 12), col_right=("S_4", 24),
             left="A7@15", right="2^3:SL3_2@8"),
        dict(row=15, gv="5^2:SL_2(5)", gw="11^2:SL_2(5)", gvw="SL_2(5)",
             ov=3000, ow=14520, ovw=120, dv=25, dw=121,
             col_left=("Z_5", 5), col_right=("1", 1),
             left="5^2:SL2_5@25", right="11^2:SL2_5@121"),
        dict(row=16, gv="13^2:SL_2(13)", gw="3^6:SL_2(13)", gvw="SL_2(13)",
             ov=369096, ow=1592136, ovw=2184, dv=169, dw=729,
             col_left=("Z_13", 13), col_right=("Z_3", 3),
             left="13^2:SL2_13@169", right="3^6:SL2_13@729"),
    ]
    with open(gdir / "amalgams.json", "w") as fh:
        json.dump({"rows": rows}, fh, indent=1)
        fh.write("\n")

    three_arc = {
        "note": ("source count discrepancy: the prose says six amalgams but "
                 "lists seven; the listed seven are taken as authoritative"),
        "triples": [
            dict(gv="A_7", gw="A_7", gvw="A_6", kind="regular", entry="A7@7"),
            dict(gv="S_7", gw="S_7", gvw="S_6", kind="regular", entry="S7@7"),
            dict(gv="A_7", gw="2^4:A_6", gvw="A_6", kind="bipartite", row=9),
            dict(gv="S_7", gw="2^4:S_6", gvw="S_6", kind="bipartite", row=10),
            dict(gv="A_8", gw="2^4:A_7", gvw="A_7", kind="bipartite", row=11),
            dict(gv="A_9", gw="2^4:A_8", gvw="A_8", kind="bipartite", row=12),
            dict(gv="S_9", gw="Sp_6(2)", gvw="S_8", kind="bipartite", row=13),
        ],
    }
    with open(gdir / "three_arc.json", "w") as fh:
        json.dump(three_arc, fh, indent=1)
        fh.write("\n")

    examples = {"rows": [
        dict(name="(3^2x5^2):SL_2(3)", shape="product", left="3^2:SL2_3@9",
             right="5^2:SL2_3@25", order=5400, parts=[9, 25]),
        dict(name="(3^2x5^2):GL_2(3)", shape="product", left="3^2:GL2_3@9",
             right=None, order=10800, parts=[9, 25],
             note="not constructible: no transitive GL_2(3) on GF(5)^2"),
        dict(name="(3^2x7^2):GL_2(3)", shape="product", left="3^2:GL2_3@9",
             right=None, order=21168, parts=[9, 49],
             note="not constructible: no transitive GL_2(3) on GF(7)^2"),
        dict(name="(5^2x7^2):GL_2(3)", shape="product", left=None, right=None,
             order=58800, parts=[25, 49],
             note="not constructible: no transitive GL_2(3) on GF(5)^2 or GF(7)^2"),
        dict(name="2^4:A_6", shape="natural-affine", left="A6@6",
             right="2^4:A6@16", order=5760, parts=[6, 16]),
        dict(name="2^4:S_6", shape="natural-affine", left="S6@6",
             right="2^4:Sp4_2@16", order=11520, parts=[6, 16]),
        dict(name="2^4:A_7", shape="natural-affine", left="A7@7",
             right="2^4:A7@16", order=40320, parts=[7, 16]),
        dict(name="2^4:A_8", shape="natural-affine", left="A8@8",
             right="2^4:SL4_2@16", order=322560, parts=[8, 16]),
        dict(name="A_8", shape="simple-product", left="A8@8",
             right="2^4:SL4_2@16", order=20160, parts=[8, 15],
             note="the published table prints K_{7,15}; the part sizes forced by "
                  "the subgroup indices are 8 and 15"),
        dict(name="(5^2x11^2):SL_2(5)", shape="product", left="5^2:SL2_5@25",
             right="11^2:SL2_5@121", order=363000, parts=[25, 121]),
        dict(name="(13^2x3^6):SL_2(13)", shape="product", left="13^2:SL2_13@169",
             right="3^6:SL2_13@729", order=269074224, parts=[169, 729]),
    ]}
    with open(gdir / "examples_table.json", "w") as fh:
        json.dump(examples, fh, indent=1)
        fh.write("\n")
    print("wrote golden tables")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("what", choices=["matrices", "entries", "golden", "all"])
    ap.add_argument("--force", action="store_true")
    args = ap.parse_args()
    if args.what in ("matrices", "all"):
        gen_matrices(args.force)
    if args.what in ("entries", "all"):
        gen_entries()
    if args.what in ("golden", "all"):
        gen_golden()


if __name__ == "__main__":
    main()
