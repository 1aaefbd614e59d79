"""Three independent computations of the chromatic polynomial plus the
coefficient closed forms and their audit harness.

The engines are deliberately separate routes to the same value:

* poly_interpolated -- brute-force colouring counts interpolated exactly;
  the desk-scale ground truth.
* poly_recursive -- the add-edge / identify recurrence with the complete
  base case.
* poly_partition -- sum over quotient set partitions weighted by falling
  factorials.
"""

from dataclasses import dataclass
from itertools import permutations
from math import comb

from .graphs import (RED, BLUE, FLEX, MixedGraph, SimpleGraph, add_flexible,
                     bichromatic_pairs, census, identify, shadow)
from .polynomial import IntPolynomial, falling_factorial, interpolate

try:
    import numpy as _np
except ImportError:  # pragma: no cover
    _np = None

# cap on k**n for the vectorized enumeration path
_VECTOR_LIMIT = 4_000_000

_assignment_cache = {}


def _assignments(n, k):
    key = (n, k)
    arr = _assignment_cache.get(key)
    if arr is None:
        grids = _np.meshgrid(*([_np.arange(k, dtype=_np.int16)] * n), indexing="ij")
        arr = _np.stack(grids, axis=-1).reshape(-1, n)
        if len(_assignment_cache) > 32:
            _assignment_cache.clear()
        _assignment_cache[key] = arr
    return arr


def _count_vectorized(M, k):
    cols = _assignments(M.n, k)
    ok = _np.ones(len(cols), dtype=bool)
    reds, blues = [], []
    for (u, v), kind in M.edges.items():
        ok &= cols[:, u] != cols[:, v]
        if kind is RED:
            reds.append((u, v))
        elif kind is BLUE:
            blues.append((u, v))
    if reds and blues:
        sub = cols[ok]
        bad = _np.zeros(len(sub), dtype=bool)
        red_codes = []
        for u, v in reds:
            a, b = sub[:, u], sub[:, v]
            red_codes.append(_np.minimum(a, b) * k + _np.maximum(a, b))
        for u, v in blues:
            a, b = sub[:, u], sub[:, v]
            code = _np.minimum(a, b) * k + _np.maximum(a, b)
            for rc in red_codes:
                bad |= rc == code
        return int(ok.sum()) - int(bad.sum())
    return int(ok.sum())


def _count_backtracking(M, k):
    n = M.n
    # edges grouped by higher endpoint so constraints are checked as soon
    # as both ends are coloured
    back = [[] for _ in range(n)]
    for (u, v), kind in M.edges.items():
        back[v].append((u, kind))
    colour = [0] * n
    pair_kinds = {}

    def place(v):
        if v == n:
            return 1
        total = 0
        for c in range(k):
            added = []
            feasible = True
            for u, kind in back[v]:
                cu = colour[u]
                if cu == c:
                    feasible = False
                    break
                if kind is FLEX:
                    continue
                code = (cu, c) if cu < c else (c, cu)
                seen = pair_kinds.get(code)
                if seen is None:
                    pair_kinds[code] = kind
                    added.append((code, None))
                elif seen is not kind and seen is not None:
                    feasible = False
                    break
                # same kind again: nothing to record
            if feasible:
                colour[v] = c
                total += place(v + 1)
            for code, prev in added:
                if prev is None:
                    del pair_kinds[code]
        return total

    return place(0)


def count_colourings(M, k):
    """Number of k-colourings of M by exhaustive enumeration.

    A colouring is proper on every edge of the shadow, and no unordered
    colour pair may carry both a Red and a Blue edge.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if M.n == 0:
        return 1
    if k == 0:
        return 0
    if _np is not None and k ** M.n <= _VECTOR_LIMIT:
        return _count_vectorized(M, k)
    return _count_backtracking(M, k)


def poly_interpolated(M):
    """Ground-truth polynomial: counts at k = 0..n, interpolated exactly."""
    return interpolate([count_colourings(M, k) for k in range(M.n + 1)])


def _legal_pairs(M):
    sh = shadow(M)
    blocked = sh.adjacency | bichromatic_pairs(M)
    return [(u, v) for u in range(M.n) for v in range(u + 1, M.n)
            if (u, v) not in blocked]


def _pick_pair(M, pairs):
    # prefer the pair with the most common shadow neighbours: identifying
    # it removes the most parallel edges, speeding saturation
    sh = shadow(M)
    nbrs = [sh.neighbours(v) for v in range(M.n)]
    best, best_score = None, -1
    for u, v in pairs:
        score = len(nbrs[u] & nbrs[v])
        if score > best_score:
            best, best_score = (u, v), score
    return best


def poly_recursive(M, cache=None):
    """Add-edge / identify recurrence.

    When every vertex pair is adjacent or a bichromatic pair, each vertex
    is forced its own colour and the polynomial is the falling factorial.
    Pass cache=True (or a dict) to memoize on a brute-force canonical key;
    only sensible for small instances.
    """
    if cache is True:
        cache = {}
    return _poly_recursive(M, cache)


def _poly_recursive(M, cache):
    key = None
    if cache is not None:
        key = canonical_mixed_key(M)
        hit = cache.get(key)
        if hit is not None:
            return hit
    pairs = _legal_pairs(M)
    if not pairs:
        result = falling_factorial(M.n)
    else:
        x, y = _pick_pair(M, pairs)
        result = (_poly_recursive(add_flexible(M, x, y), cache)
                  + _poly_recursive(identify(M, x, y), cache))
    if cache is not None:
        cache[key] = result
    return result


def _set_partitions(n):
    """Restricted-growth strings: yields block-index arrays."""
    if n == 0:
        yield []
        return
    a = [0] * n
    b = [0] * n  # b[i] = max(a[:i+1])
    while True:
        yield a
        # advance
        i = n - 1
        while i > 0 and a[i] == b[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        b[i] = max(b[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = b[i]


def poly_partition(M):
    """Sum over valid quotient partitions weighted by falling factorials.

    A partition is valid when every block is independent in the shadow and
    no two blocks carry both a Red and a Blue edge between them.
    """
    n = M.n
    if n == 0:
        return IntPolynomial.one()
    edges = [(u, v, kind) for (u, v), kind in M.edges.items()]
    counts = [0] * (n + 1)  # counts[k] = partitions into exactly k blocks
    for a in _set_partitions(n):
        pair_kind = {}
        valid = True
        for u, v, kind in edges:
            bu, bv = a[u], a[v]
            if bu == bv:
                valid = False
                break
            if kind is FLEX:
                continue
            code = (bu, bv) if bu < bv else (bv, bu)
            seen = pair_kind.get(code)
            if seen is None:
                pair_kind[code] = kind
            elif seen is not kind:
                valid = False
                break
        if valid:
            counts[max(a) + 1] += 1
    result = IntPolynomial.zero()
    for k, c in enumerate(counts):
        if c:
            result = result + c * falling_factorial(k)
    return result


def chromatic_number(M):
    """Least k admitting a colouring; 0 for the empty graph.

    Never exceeds n: an injective assignment always satisfies both
    colouring conditions.
    """
    if M.n == 0:
        return 0
    for k in range(1, M.n + 1):
        if count_colourings(M, k) > 0:
            return k
    raise AssertionError("no colouring found up to n, which is impossible")


def classical_chromatic(graph):
    """Ordinary chromatic polynomial of a plain graph by deletion-contraction."""
    return _del_con(graph.n, frozenset(graph.adjacency))


def _del_con(n, edges):
    if not edges:
        return IntPolynomial.x() ** n
    u, v = min(edges)
    deleted = edges - {(u, v)}
    # contract v into u, compact labels above v
    contracted = set()
    for a, b in deleted:
        a2 = u if a == v else (a - 1 if a > v else a)
        b2 = u if b == v else (b - 1 if b > v else b)
        if a2 != b2:
            contracted.add((a2, b2) if a2 < b2 else (b2, a2))
    return _del_con(n, deleted) - _del_con(n - 1, frozenset(contracted))


def coeff_formula_second(M):
    """Closed form for the coefficient of lambda^(n-1)."""
    if M.n < 1:
        raise ValueError("needs at least one vertex")
    c = census(M)
    return -(c.red_count + c.blue_count + c.flex_count + c.ppair_count)


def coeff_formula_third(M):
    """Asserted closed form for the coefficient of lambda^(n-2).

    Implemented verbatim; NOT guaranteed ground truth.  Known to disagree
    with the true coefficient on some instances (e.g. the bichromatic
    2K2); see audit_coefficients.
    """
    if M.n < 2:
        raise ValueError("needs at least two vertices")
    c = census(M)
    m = c.red_count + c.blue_count + c.ppair_count + c.flex_count
    return comb(m, 2) - c.triangle_count - c.ppair_count - c.obstruct_count


@dataclass(frozen=True)
class CoefficientAudit:
    formula_second: int
    true_second: int
    formula_third: int
    true_third: int

    @property
    def agrees_second(self):
        return self.formula_second == self.true_second

    @property
    def agrees_third(self):
        return self.formula_third == self.true_third


def audit_coefficients(M, poly=None):
    """Compare both closed forms against an engine-computed polynomial."""
    if M.n < 2:
        raise ValueError("needs at least two vertices")
    if poly is None:
        poly = poly_interpolated(M)
    return CoefficientAudit(
        formula_second=coeff_formula_second(M),
        true_second=poly.coefficient(M.n - 1),
        formula_third=coeff_formula_third(M),
        true_third=poly.coefficient(M.n - 2),
    )


_KIND_CODE = {None: 0, RED: 1, BLUE: 2, FLEX: 3}


def canonical_mixed_key(M):
    """Canonical form by permutation minimization; intended for n <= 10."""
    if M.n > 10:
        raise ValueError("canonical key is brute force; n <= 10 only")
    n = M.n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    best = None
    for perm in permutations(range(n)):
        code = tuple(_KIND_CODE[M.kind(perm[u], perm[v])] for u, v in pairs)
        if best is None or code < best:
            best = code
    return (n, best)
