"""Verification campaigns: each check runs a statement over a parameter grid
and returns a report with every failure recorded alongside its inputs.

A check is a pair (cells, run): `cells(grid)` lists independent work items
and `run(cell)` returns a partial result. Partial results are merged in cell
order, so reports do not depend on the number of workers.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations

from .factor import factorint, primes_up_to
from .groups import (
    EVEN_ORTHOGONAL,
    LINEAR,
    ODD_ORTHOGONAL,
    SYMPLECTIC,
    GroupDescriptor,
    index_range,
    order_of,
    order_value,
    phi_of_index,
    prime_power,
    valid_indices,
)
from .primegraph import (
    CHAR,
    graph_shape,
    index_graph,
    max_coclique_exact,
    nonadjacent,
    zeta_table,
)
from .spectra import (
    big_spectral_element,
    has_cyclic_hall,
    hall_part_is_exact,
    max_spectral_bound,
    semisimple_member,
    torus_cover,
)
from .tables import (
    TABLE_FLOOR,
    RangeError,
    eta_third_zeta,
    n_minus_m_formula,
    table1,
    table2,
    table2_applies,
    table3,
    table3_index_rows,
    t_window_formula,
    zeta_floor,
    zeta_formula,
)
from .zsigmondy import (
    EIGHT_NINTHS_EXCEPTIONS,
    ZSIGMONDY_EXCEPTIONS,
    DomainError,
    LemmaViolation,
    count_eta_interval,
    euler_phi,
    eta,
    has_primitive_divisor,
    interval_prime_failures,
    k_value,
    mult_order,
    nu_eps,
    order_mod,
    primitive_prime_divisors,
    strip_prime,
)

SIGNED_FAMILIES = {
    "L": (LINEAR, 1),
    "U": (LINEAR, -1),
    "S": (SYMPLECTIC, 1),
    "O": (ODD_ORTHOGONAL, 1),
    "O+": (EVEN_ORTHOGONAL, 1),
    "O-": (EVEN_ORTHOGONAL, -1),
}
DEFAULT_QS = (2, 3, 4, 5, 7, 8, 9, 11, 13)


def family_key(family, eps):
    for k, v in SIGNED_FAMILIES.items():
        if v == (family, eps):
            return k
    raise DomainError(f"no family key for {family}, {eps}")


@dataclass
class GridSpec:
    families: tuple = tuple(SIGNED_FAMILIES)
    qs: tuple = DEFAULT_QS
    nmin: int = None
    nmax: int = None
    amax: int = None
    imax: int = None
    workers: int = 1

    def as_dict(self):
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(self).items() if k != "workers"}


@dataclass
class VerificationReport:
    lemma: str
    grid: dict
    passed: int
    failures: list
    wall_time: float
    found: dict = field(default_factory=dict)
    clamped: list = field(default_factory=list)

    @property
    def status(self):
        return "pass" if not self.failures else "fail"

    def as_dict(self):
        return {
            "lemma": self.lemma,
            "status": self.status,
            "grid": self.grid,
            "passed": self.passed,
            "failures": self.failures,
            "found": self.found,
            "clamped": self.clamped,
            "wall_time": round(self.wall_time, 3),
        }


def _result(count=0, failures=None, **found):
    return {"count": count, "failures": failures or [], "found": found}


def _merge(parts):
    count, failures, found = 0, [], {}
    for p in parts:
        count += p["count"]
        failures += p["failures"]
        for k, v in p["found"].items():
            if isinstance(v, list):
                found.setdefault(k, []).extend(v)
            elif isinstance(v, int) and not isinstance(v, bool):
                found[k] = found.get(k, 0) + v
            else:
                found[k] = v
    return count, failures, found


def _groups(grid, nmin, nmax):
    for key in grid.families:
        family, eps = SIGNED_FAMILIES[key]
        for q in grid.qs:
            for n in range(nmin, nmax + 1):
                try:
                    yield GroupDescriptor(family, n, q, eps)
                except DomainError:
                    continue


def _descr(L):
    return [L.family, L.n, L.q, L.eps]


def _group(cell):
    family, n, q, eps = cell
    return GroupDescriptor(family, n, q, eps)


def _group_cells(grid, floor, default_max, clamped, hard_max=None):
    nmin = grid.nmin if grid.nmin is not None else floor
    if nmin < floor:
        clamped.append(f"nmin raised from {nmin} to {floor}")
        nmin = floor
    nmax = grid.nmax if grid.nmax is not None else default_max
    if hard_max is not None and nmax > hard_max:
        clamped.append(f"nmax lowered from {nmax} to {hard_max}")
        nmax = hard_max
    return [tuple(_descr(L)) for L in _groups(grid, nmin, nmax)]


def _unique_shapes(cells):
    """Keep one cell per prime-graph shape and family label."""
    seen, out = set(), []
    for c in cells:
        L = _group(c)
        key = (graph_shape(L), L.family, L.eps)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out


# Primitive divisors and greatest primitive divisors.

def _spot_cells(grid, clamped):
    return [None]


KSPOT = [((20, 2), 41), ((6, 2), 1), ((3, 4), 7), ((2, 2), 3), ((2, -2), 1)]


def _spot_run(_):
    fails = [{"i": i, "a": a, "expected": v, "got": k_value(i, a)} for (i, a), v in KSPOT if k_value(i, a) != v]
    return _result(len(KSPOT) - len(fails), fails)


def _bases(amax):
    return [a for m in range(2, amax + 1) for a in (m, -m)]


def _zsig_cells(grid, clamped):
    return [(a, grid.imax or 50) for a in _bases(grid.amax or 50)]


def _zsig_run(cell):
    a, imax = cell
    fails, empty = [], []
    for i in range(1, imax + 1):
        nonempty = has_primitive_divisor(i, a)
        if not nonempty:
            empty.append([a, i])
        if nonempty == ((a, i) in ZSIGMONDY_EXCEPTIONS):
            fails.append({"a": a, "i": i, "nonempty": nonempty})
        # second route: k_i(a) > 1 iff some primitive divisor exists
        if (k_value(i, a) > 1) != nonempty:
            fails.append({"a": a, "i": i, "route": "k_i(a) > 1", "nonempty": nonempty})
    return _result(imax, fails, exceptions=empty)


def _coprime_cells(grid, clamped):
    return [(a, grid.imax or 40) for a in _bases(grid.amax or 30)]


def _coprime_run(cell):
    a, imax = cell
    ks = {i: k_value(i, a) for i in range(1, imax + 1)}
    fails = [{"a": a, "i": i, "j": j} for i, j in combinations(ks, 2) if math.gcd(ks[i], ks[j]) != 1]
    return _result(len(ks) * (len(ks) - 1) // 2, fails)


def _ppd_cells(grid, clamped):
    return [(a, grid.imax or 24) for a in _bases(grid.amax or 10)]


def _ppd_run(cell):
    a, imax = cell
    fails, count = [], 0
    for i in range(1, imax + 1):
        k = k_value(i, a)
        full = abs(a**i - 1)
        for r in primitive_prime_divisors(i, a):
            if r == 2:
                continue
            count += 1
            if order_mod(r, a) != i:
                fails.append({"a": a, "i": i, "r": r, "reason": "order"})
            e = 0
            while full % r == 0:
                full //= r
                e += 1
            if k % r**e:
                fails.append({"a": a, "i": i, "r": r, "reason": "multiplicity"})
    return _result(count, fails)


def _kpow_cells(grid, clamped):
    return [(a, grid.imax or 24) for a in _bases(grid.amax or 12)]


def _kpow_run(cell):
    a, imax = cell
    fails, count = [], 0
    for i in range(1, imax + 1):
        for p in (2, 3, 5):
            big, small = k_value(i * p, a), k_value(i, a**p)
            count += 1
            if small % big or (i % p == 0 and big != small):
                fails.append({"a": a, "i": i, "p": p, "k_ip(a)": big, "k_i(a^p)": small})
    return _result(count, fails)


def _kneg_run(cell):
    a, imax = cell
    fails, count = [], 0
    for i in range(1, imax + 1):
        if i % 2:
            count += 1
            if k_value(i, -a) != k_value(2 * i, a):
                fails.append({"a": a, "i": i, "case": "odd"})
        elif i % 4 == 0:
            count += 1
            if k_value(i, -a) != k_value(i, a):
                fails.append({"a": a, "i": i, "case": "4 | i"})
    return _result(count, fails)


def _klower_cells(grid, clamped):
    return [(a, grid.imax or 60) for a in range(2, (grid.amax or 40) + 1)]


def _klower_run(cell):
    a, imax = cell
    fails, count = [], 0
    for i in range(3, imax + 1):
        if (a, i) in ((2, 3), (2, 6)):
            continue
        ph = euler_phi(i)
        for s in (1, -1):
            count += 1
            # k > a^(phi/2)  <=>  k^2 > a^phi
            if not k_value(i, s * a) ** 2 > a**ph:
                fails.append({"a": a, "i": i, "eps": s})
    return _result(count, fails)


_SMALL_PHI_SET = {42, 36, 30, 28, 26, 24, 22, 21, 15, 13, 11}


def _klarge_cells(grid, clamped):
    umax = grid.amax or 97
    return [u for u in range(2, umax + 1) if _is_prime_power(u)]


def _is_prime_power(u):
    try:
        prime_power(u)
        return True
    except DomainError:
        return False


def _klarge_run(u):
    js = sorted({j for j in range(1, 61) if eta(j) >= 11} | _SMALL_PHI_SET)
    fails, count = [], 0
    for j in js:
        for s in (1, -1):
            count += 1
            if not k_value(j, s * u) > u**7:
                fails.append({"u": u, "j": j, "eps": s, "claim": "k_j > u^7"})
            for p in (3, 5, 7, 11):
                count += 1
                if not k_value(j * p, s * u) > u ** (5 * p):
                    fails.append({"u": u, "j": j, "p": p, "eps": s, "claim": "k_jp > u^5p"})
    return _result(count, fails)


def small_phi_set():
    """j with eta(j) >= 11 and Euler phi(j) <= 14 (all such j are at most 196)."""
    return {j for j in range(1, 197) if eta(j) >= 11 and euler_phi(j) <= 14}


def _klarge_set_cells(grid, clamped):
    return [None]


def _klarge_set_run(_):
    got = small_phi_set()
    fails = [] if got == _SMALL_PHI_SET else [{"expected": sorted(_SMALL_PHI_SET), "got": sorted(got)}]
    return _result(1, fails, small_phi_set=sorted(got))


def ki_cases(gamma, version="proof"):
    """(case, i, D): every odd r | k_i(a) - 1 coprime to a has e(r, a) | D.

    Case (iii) is stated with divisor 2^(gamma+1), but for i = 5 * 2^(gamma+1)
    one has Phi_i(a) - 1 = x (x^2 + 1)(x - 1) with x = a^(2^gamma), whose odd
    primes coprime to a have order dividing 2^(gamma+2); a = 2, gamma = 2
    gives r = 257 with e(r, 2) = 16. `version` picks the divisor checked.
    """
    g = gamma
    d3 = 2 ** (g + 2) if version == "proof" else 2 ** (g + 1)
    return [
        ("i", 2**g, 2 ** (g - 1)),
        ("ii", 3 * 2**g, 2**g),
        ("iii", 5 * 2 ** (g + 1), d3),
        ("iv", 7 * 2**g, 3 * 2**g),
        ("v", 9 * 2**g, 3 * 2 ** (g - 1)),
        ("vi", 11 * 2**g, 5 * 2**g),
    ]


def ki_holds(a, i, D):
    """No odd prime outside those of a and a^D - 1 divides k_i(a) - 1."""
    N = k_value(i, a) - 1
    return strip_common(strip_common(strip_prime(N, 2), a), a**D - 1) == 1


def strip_common(n, m):
    """Remove from n every prime factor it shares with m."""
    g = math.gcd(n, m)
    while g > 1:
        while n % g == 0:
            n //= g
        g = math.gcd(n, g)
    return n


FACTOR_LIMIT = 10**30


def _ki_cells(grid, clamped):
    amax = grid.amax or 20
    return [(a, g) for a in _bases(amax) for g in range(2, (grid.imax or 5) + 1)]


def _ki_run(cell):
    a, g = cell
    fails, count, factored, statement = [], 0, 0, []
    for case, i, D in ki_cases(g):
        count += 1
        N = k_value(i, a) - 1
        if not ki_holds(a, i, D):
            fails.append({"a": a, "gamma": g, "case": case, "i": i, "D": D})
        if 1 < N < FACTOR_LIMIT:
            factored += 1
            for r in factorint(N):
                if r != 2 and a % r and D % mult_order(r, a):
                    fails.append({"a": a, "gamma": g, "case": case, "r": r, "route": "factorization"})
    case, i, D = ki_cases(g, version="statement")[2]
    if not ki_holds(a, i, D):
        statement.append([a, g, i, D])
    return _result(count, fails, factored=factored, statement_mismatches=statement)


def _eta_cells(grid, clamped):
    bmax = grid.nmax or 200
    return [b for b in range(2, bmax + 1)]


def _eta_run(b):
    fails = []
    for a in range(1, b):
        try:
            count_eta_interval(a, b)
        except LemmaViolation as e:
            fails.append({"a": a, "b": b, "error": str(e)})
    return _result(b - 1, fails)


def _interval_cells(grid, clamped):
    return [("five-sixths", grid.nmax or 10**5), ("eight-ninths", grid.nmax or 10**5)]


def _interval_run(cell):
    mode, nmax = cell
    frac = Fraction(5, 6) if mode == "five-sixths" else Fraction(8, 9)
    bad = interval_prime_failures(nmax, frac)
    expected = [] if mode == "five-sixths" else sorted(n for n in EIGHT_NINTHS_EXCEPTIONS if n <= nmax)
    fails = [] if bad == expected else [{"mode": mode, "expected": expected, "got": bad}]
    return _result(nmax - 29, fails, **{f"exceptions_{mode}": bad})


# Groups.

def _order_grid_cells(grid, clamped):
    return _group_cells(grid, 4, 20, clamped)


def _fermat_run(cell):
    L = _group(cell)
    fails, count = [], 0
    for r in order_of(L).primes:
        if r == L.p or r == 2:
            continue
        count += 1
        ph = phi_of_index(mult_order(r, L.q), L)
        if (r - 1) % ph or (L.family != LINEAR and (r - 1) % (2 * ph)):
            fails.append({"group": str(L), "r": r, "phi": ph})
        if ph > L.n:
            fails.append({"group": str(L), "r": r, "phi": ph, "claim": "phi <= n"})
    return _result(count, fails)


def _smallerq_run(cell):
    L = _group(cell)
    fails, count = [], 0
    for i in valid_indices(L):
        for l in (1, 3, 5):
            m = i
            while m % 2 == 0:
                m //= 2
            if l % m:
                continue
            count += 1
            ph = phi_of_index(i, L)
            ok = (ph <= 2 * l or ph == i) if L.family == LINEAR else (ph <= l or 2 * ph == i)
            if not ok:
                fails.append({"group": str(L), "i": i, "l": l, "phi": ph})
    return _result(count, fails)


def _valid_run(cell):
    L = _group(cell)
    order = order_value(L)
    fails, count = [], 0
    valid = valid_indices(L)
    for i in range(1, 4 * L.n + 5):
        k = k_value(i, L.q)
        count += 1
        divides = k > 1 and order % k == 0
        if (i in valid) != divides:
            fails.append({"group": str(L), "i": i, "valid": i in valid, "k_i(q) | |L|": divides})
        if i not in valid and k > 1 and math.gcd(k, order) != 1:
            fails.append({"group": str(L), "i": i, "reason": "invalid index shares a prime with |L|"})
    return _result(count, fails)


# Prime graphs and tables.

def _table_cells(grid, clamped):
    return _unique_shapes(_group_cells(grid, TABLE_FLOOR, 64, clamped))


def _table1_run(cell):
    L = _group(cell)
    rep = max_coclique_exact(L)
    t, E, JE = table1(L)
    ok = rep.size == t and rep.intersection == E and rep.union == E | JE and not rep.includes_char
    if ok:
        return _result(1)
    return _result(0, [{"group": str(L), "exact": rep.as_dict(), "formula": {"t": t, "E": sorted(E), "J-E": sorted(JE)}}])


def _table2_run(cell):
    L = _group(cell)
    if not table2_applies(L):
        return _result()
    rep = max_coclique_exact(L, CHAR)
    tp, Jp = table2(L)
    fails = []
    if not (rep.size == tp and rep.intersection == Jp == rep.union):
        fails.append({"group": str(L), "row": "p", "exact": rep.as_dict(), "formula": {"t": tp, "J": sorted(Jp)}})
    count = 1
    verts = graph_shape(L)[3]
    for e in table3_index_rows(L):
        if e not in verts:
            continue
        count += 1
        rep = max_coclique_exact(L, e)
        row = table3(L, e)
        if row is None:
            if rep.size <= 4:
                fails.append({"group": str(L), "row": e, "exact": rep.as_dict(), "formula": None})
            continue
        t, J = row
        if not (rep.size == t and rep.intersection == J == rep.union):
            fails.append({"group": str(L), "row": e, "exact": rep.as_dict(), "formula": {"t": t, "J": sorted(J)}})
    return _result(count - len(fails), fails)


def _adjacency_run(cell):
    L = _group(cell)
    G = index_graph(L)
    n = L.n
    verts = G.indices
    valid = valid_indices(L)
    fails, count = [], 0
    for i, j in combinations(verts, 2):
        count += 1
        a, b = nonadjacent(i, j, L, valid), nonadjacent(j, i, L, valid)
        if a != b:
            fails.append({"group": str(L), "i": i, "j": j, "claim": "symmetry"})
        pi, pj = phi_of_index(i, L), phi_of_index(j, L)
        if 2 * pi <= n and 2 * pj <= n and a:
            fails.append({"group": str(L), "i": i, "j": j, "claim": "small phi pairs are adjacent"})
        if 2 * pi > n and 2 * pj > n and pi <= n and pj <= n and not a:
            fails.append({"group": str(L), "i": i, "j": j, "claim": "large phi pairs are nonadjacent"})
    if L.family == LINEAR:
        for k in range(1, 4 * n + 1):
            if nu_eps(nu_eps(k, L.eps), L.eps) != k:
                fails.append({"group": str(L), "k": k, "claim": "nu_eps is an involution"})
    return _result(count, fails)


def _zeta_cells(grid, clamped):
    cells = _group_cells(grid, TABLE_FLOOR, 64, clamped)
    out = [c for c in cells if c[1] >= zeta_floor(_group(c))]
    if len(out) < len(cells):
        clamped.append("rows below the anchored-size floors (L 45, S/O 29, O+- 30) skipped")
    return _unique_shapes(out)


def _zeta_run(cell):
    L = _group(cell)
    Z = zeta_table(L)
    t = Z.t
    fails, statement = [], []
    for i in sorted(Z.M):
        f = zeta_formula(i, L)
        if Z.zeta[i] != f:
            fails.append({"group": str(L), "i": i, "exact": Z.zeta[i], "formula": f})
        if L.family == EVEN_ORTHOGONAL and L.eps < 0:
            s = zeta_formula(i, L, version="statement")
            if s != Z.zeta[i]:
                statement.append([str(L), i, Z.zeta[i], s])
    plus, minus = n_minus_m_formula(L)
    if Z.N - Z.M != plus or Z.M - Z.N != minus:
        fails.append({"group": str(L), "N-M": sorted(Z.N - Z.M), "M-N": sorted(Z.M - Z.N),
                      "formula": [sorted(plus), sorted(minus)]})
    third = eta_third_zeta(L)
    if third:
        v, k = third
        for i in Z.N - Z.M:
            if Z.zeta[i] != v or 3 * v != 2 * t + k:
                fails.append({"group": str(L), "i": i, "exact": Z.zeta[i], "formula": v})
    lo, hi, expected = t_window_formula(L)
    got = {t - x for x in Z.T} if lo == "all" else {a for a in range(lo, hi + 1) if t - a in Z.T}
    if got != expected:
        fails.append({"group": str(L), "T offsets": sorted(got), "formula": sorted(expected)})
    return _result(len(Z.M) + 2, fails, statement_mismatches=statement)


# Tori.

def _torus_cells(grid, clamped):
    return _unique_shapes(_group_cells(grid, TABLE_FLOOR, 64, clamped))


def _torus_run(cell):
    L = _group(cell)
    valid = valid_indices(L)
    verts = graph_shape(L)[3]
    fails, count = [], 0
    for i in index_range(L):
        if i > 2 and torus_cover([i], L) is None:
            fails.append({"group": str(L), "i": i, "claim": "singleton"})
    for i, j in combinations(verts, 2):
        count += 1
        member = semisimple_member([i, j], L, valid) is not None
        if member == nonadjacent(i, j, L, valid):
            fails.append({"group": str(L), "i": i, "j": j, "cover": member})
    return _result(count, fails)


def _hall_cells(grid, clamped):
    g = GridSpec(grid.families, tuple(q for q in grid.qs if q <= 7), grid.nmin, grid.nmax)
    return _group_cells(g, 4, 20, clamped, hard_max=24)


def _hall_run(cell):
    L = _group(cell)
    fails, count = [], 0
    for i in valid_indices(L):
        if i > 2 and has_cyclic_hall(i, L):
            count += 1
            if not hall_part_is_exact(i, L):
                fails.append({"group": str(L), "i": i})
    return _result(count, fails)


def _bigk_cells(grid, clamped):
    return _group_cells(grid, 23, 119, clamped)


def _bigk_run(cell):
    L = _group(cell)
    fails, count = [], 0
    try:
        w = big_spectral_element(L)
        count += 1
        if w.index not in valid_indices(L):
            fails.append({"group": str(L), "j": w.j, "claim": "witness index divides |L|"})
    except RangeError:
        pass
    except LemmaViolation as e:
        fails.append({"group": str(L), "error": str(e)})
    try:
        max_spectral_bound(L)
        count += 1
    except LemmaViolation as e:
        fails.append({"group": str(L), "error": str(e)})
    return _result(count, fails)


# Elimination.

def _gap_cells(grid, clamped):
    return [None]


def _gap_run(_):
    from .eliminator import qbyq_exponent_exceeds_three, tmaless2t3

    fails, count = [], 0
    for t in range(23, 201):
        for a in range(1, 7):
            count += 1
            if not tmaless2t3(t, a):
                fails.append({"t": t, "a": a, "claim": "t - a > (2t+2)/3"})
    for l in range(23, 201):
        for t in range(l + 1, 2 * l + 1):
            for d in (t - l, t - l + 1):
                count += 1
                if not qbyq_exponent_exceeds_three(l, t, d):
                    fails.append({"l": l, "t": t, "d": d, "claim": "10ld/(3t) > 3"})
    return _result(count, fails)


def _exceptional_cells(grid, clamped):
    cells = _group_cells(grid, 29, 64, clamped)
    return _unique_shapes([c for c in cells if table1(_group(c))[0] >= 23])


def _exceptional_run(cell):
    from .eliminator import class_from_T, classify, tlints_exceptional

    L = _group(cell)
    Z = zeta_table(L)
    vals = {Z.zeta[i] for i in Z.N - Z.M}
    fails = []
    if not vals <= tlints_exceptional(L):
        fails.append({"group": str(L), "values": sorted(vals), "allowed": sorted(map(str, tlints_exceptional(L)))})
    if classify(L) != class_from_T(L):
        fails.append({"group": str(L), "class": classify(L), "from T": class_from_T(L)})
    return _result(2 - len(fails), fails)


def _witness_run(cell):
    from .eliminator import rsnotprs_witnesses

    L = _group(cell)
    Z = zeta_table(L)
    fails, count = [], 0
    for j in sorted(Z.M & Z.N):
        count += 1
        try:
            rsnotprs_witnesses(j, L)
        except (LemmaViolation, DomainError) as e:
            fails.append({"group": str(L), "j": j, "error": str(e)})
    return _result(count, fails)


ELIMINATION_TARGETS = (("L", 45), ("U", 45), ("S", 28), ("O", 28), ("O+", 31), ("O-", 30))
ELIMINATION_QS = (3, 4, 5, 9)


def _elim_cells(grid, clamped):
    from .eliminator import candidates

    qs = grid.qs if grid.qs != DEFAULT_QS else ELIMINATION_QS
    out = []
    for key, n in ELIMINATION_TARGETS:
        if key not in grid.families:
            continue
        family, eps = SIGNED_FAMILIES[key]
        for q in qs:
            L = GroupDescriptor(family, n, q, eps)
            try:
                cands = candidates(L)
            except RangeError:
                continue
            out += [(tuple(_descr(L)), tuple(_descr(S))) for S in cands]
    return out


def _elim_run(cell):
    from .eliminator import ContradictionReport, eliminate

    L, S = _group(cell[0]), _group(cell[1])
    try:
        r = eliminate(L, S)
    except RangeError as e:
        return _result(0, [{"L": str(L), "S": str(S), "error": str(e)}])
    if isinstance(r, ContradictionReport) and r.verified:
        return _result(1, patterns=[r.pattern])
    return _result(0, [{"L": str(L), "S": str(S), "result": r.as_dict()}])


CHECKS = {
    "kspot": (_spot_cells, _spot_run),
    "zsigmondy": (_zsig_cells, _zsig_run),
    "kcoprime": (_coprime_cells, _coprime_run),
    "ppd": (_ppd_cells, _ppd_run),
    "kpower": (_kpow_cells, _kpow_run),
    "knegated": (_kpow_cells, _kneg_run),
    "klower": (_klower_cells, _klower_run),
    "klarge": (_klarge_cells, _klarge_run),
    "klargeset": (_klarge_set_cells, _klarge_set_run),
    "kminusone": (_ki_cells, _ki_run),
    "etacount": (_eta_cells, _eta_run),
    "intervalprime": (_interval_cells, _interval_run),
    "phidivides": (_order_grid_cells, _fermat_run),
    "smallerq": (_order_grid_cells, _smallerq_run),
    "validindices": (_order_grid_cells, _valid_run),
    "adjacency": (_table_cells, _adjacency_run),
    "table1": (_table_cells, _table1_run),
    "table23": (_table_cells, _table2_run),
    "zeta": (_zeta_cells, _zeta_run),
    "torus": (_torus_cells, _torus_run),
    "hall": (_hall_cells, _hall_run),
    "bigk": (_bigk_cells, _bigk_run),
    "gaps": (_gap_cells, _gap_run),
    "exceptional": (_exceptional_cells, _exceptional_run),
    "witnesses": (_exceptional_cells, _witness_run),
    "eliminate": (_elim_cells, _elim_run),
}


def _map(fn, cells, workers):
    if workers <= 1 or len(cells) < 2:
        return [fn(c) for c in cells]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, cells, chunksize=max(1, len(cells) // (8 * workers))))


def run_check(name, grid=None):
    """Run one named check and return its VerificationReport."""
    if name not in CHECKS:
        raise DomainError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
    grid = grid or GridSpec()
    cells_fn, run_fn = CHECKS[name]
    clamped = []
    t0 = time.perf_counter()
    cells = cells_fn(grid, clamped)
    count, failures, found = _merge(_map(run_fn, cells, grid.workers))
    if "patterns" in found:
        found["patterns"] = {p: found["patterns"].count(p) for p in sorted(set(found["patterns"]))}
    return VerificationReport(name, grid.as_dict(), count, failures, time.perf_counter() - t0, found, clamped)


def run_all(grid=None, names=None):
    return [run_check(n, grid) for n in (names or CHECKS)]
