"""Root location for exact integer polynomials.

Integer roots are split off exactly (zero roots, then a divisor scan of
the trailing coefficient, then exact verification of any numerically
integer-looking root).  The remaining factor goes to an Aberth-style
simultaneous iteration in double precision, with per-root high-precision
Newton polish when the double residual misses the tolerance.
"""

import cmath
from dataclasses import dataclass, field

import mpmath as mp

from .polynomial import IntPolynomial, evaluate_int

DEFAULT_TOL = 1e-9
CLUSTER_TOL = 1e-6
MAX_DEGREE = 64
_DIVISOR_SCAN_LIMIT = 10 ** 12
_ABERTH_CAP = 500


class ConvergenceFailure(Exception):
    def __init__(self, message, best=None, residual=None):
        super().__init__(message)
        self.best = best
        self.residual = residual


@dataclass(frozen=True)
class RootSet:
    """Roots of an integer polynomial, integer part exact.

    Complex entries carry a positive imaginary part; the conjugate is
    implied.  Entries are (value(s), residual, multiplicity) and the
    multiplicity-weighted total (conjugates counted) equals source_degree.
    """

    source_degree: int
    integer_roots: tuple            # sorted, with repetition
    real_roots: tuple = field(default=())    # (value, residual, multiplicity)
    complex_roots: tuple = field(default=()) # (re, im, residual, multiplicity)

    def total_count(self):
        return (len(self.integer_roots)
                + sum(m for _, _, m in self.real_roots)
                + 2 * sum(m for _, _, _, m in self.complex_roots))

    def all_points(self):
        """Every root as a complex point, conjugates included."""
        pts = [complex(r, 0) for r in self.integer_roots]
        for v, _, m in self.real_roots:
            pts.extend([complex(v, 0)] * m)
        for re, im, _, m in self.complex_roots:
            pts.extend([complex(re, im)] * m + [complex(re, -im)] * m)
        return pts


def _deflate_int(coeffs, r):
    """Exact synthetic division of an integer polynomial by (x - r)."""
    out = [0] * (len(coeffs) - 1)
    acc = 0
    for i in range(len(coeffs) - 1, 0, -1):
        acc = coeffs[i] + acc * r
        out[i - 1] = acc
    assert coeffs[0] + acc * r == 0, "not a root"
    return out


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_int(coeffs, r):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * r + c
    return acc


def _extract_integer_roots(coeffs):
    roots = []
    while len(coeffs) > 1 and coeffs[0] == 0:
        roots.append(0)
        coeffs = coeffs[1:]
    if len(coeffs) > 1 and abs(coeffs[0]) <= _DIVISOR_SCAN_LIMIT:
        for d in _divisors(coeffs[0]):
            for r in (d, -d):
                while len(coeffs) > 1 and _poly_int(coeffs, r) == 0:
                    roots.append(r)
                    coeffs = _deflate_int(coeffs, r)
                if len(coeffs) > 1 and coeffs[0] == 0:
                    # fresh zero roots exposed by deflation
                    while len(coeffs) > 1 and coeffs[0] == 0:
                        roots.append(0)
                        coeffs = coeffs[1:]
    return sorted(roots), coeffs


def _initial_circle(coeffs):
    d = len(coeffs) - 1
    lead = abs(coeffs[-1])
    cauchy = 1 + max(abs(c) for c in coeffs) / lead
    fuji = 2 * max((abs(coeffs[i]) / lead) ** (1.0 / (d - i))
                   for i in range(d)) if d else 1.0
    radius = min(cauchy, fuji)
    return [radius * cmath.exp(2j * cmath.pi * (k + 0.25) / d)
            for k in range(d)]


def _aberth_double(coeffs):
    """Simultaneous Aberth iteration in double precision."""
    d = len(coeffs) - 1
    cs = [float(c) / float(coeffs[-1]) for c in coeffs]
    dcs = [cs[i] * i for i in range(1, len(cs))]

    def ev(poly, z):
        acc = 0j
        for c in reversed(poly):
            acc = acc * z + c
        return acc

    z = _initial_circle(cs)
    for _ in range(_ABERTH_CAP):
        moved = 0.0
        for i in range(d):
            pz = ev(cs, z[i])
            dz = ev(dcs, z[i])
            if dz == 0:
                z[i] += 1e-6 + 1e-6j
                moved = float("inf")
                continue
            w = pz / dz
            s = 0j
            for j in range(d):
                if j != i:
                    diff = z[i] - z[j]
                    if diff == 0:
                        diff = 1e-12
                    s += 1 / diff
            denom = 1 - w * s
            step = w if denom == 0 else w / denom
            z[i] -= step
            moved = max(moved, abs(step))
        if moved < 1e-14:
            break
    return z


def _collapsed(approx):
    """True when two iterates landed within the cluster tolerance, the
    signature of a double-precision pass that lost roots."""
    for i, a in enumerate(approx):
        for b in approx[i + 1:]:
            if abs(a - b) <= CLUSTER_TOL:
                return True
    return False


def _solve_mp(coeffs):
    """Full arbitrary-precision solve, used when the double-precision
    Aberth pass collapses iterates on ill-conditioned input."""
    degree = len(coeffs) - 1
    digits = len(str(max(abs(c) for c in coeffs)))
    with mp.workdps(50):
        try:
            roots = mp.polyroots([mp.mpf(c) for c in reversed(coeffs)],
                                 maxsteps=200,
                                 extraprec=10 * degree + 4 * digits)
        except mp.libmp.NoConvergence:
            return None
        return [complex(r) for r in roots]


def _polish_mp(coeffs, z0, tol, dps):
    """Newton refinement of one root in arbitrary precision."""
    with mp.workdps(dps):
        cs = [mp.mpf(c) for c in coeffs]
        dcs = [cs[i] * i for i in range(1, len(cs))]
        z = mp.mpc(z0)
        best, best_res = z, mp.inf
        for _ in range(300):
            pz = mp.polyval(cs[::-1], z)
            res = abs(pz)
            if res < best_res:
                best, best_res = z, res
            if res <= tol / 10:
                break
            dz = mp.polyval(dcs[::-1], z)
            if dz == 0:
                break
            z = z - pz / dz
        else:
            pass
        return complex(best), float(best_res)


def find_roots(p, tol=DEFAULT_TOL):
    """All roots of a nonzero integer polynomial of degree <= 64.

    Integer roots are exact (residual 0); the rest carry residuals of the
    monic-scaled deflated polynomial, required to be at most tol.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no root set")
    if p.degree > MAX_DEGREE:
        raise ValueError("degree %d exceeds cap %d" % (p.degree, MAX_DEGREE))
    coeffs = list(p.coeffs)
    int_roots, coeffs = _extract_integer_roots(coeffs)

    numeric = []
    # Aberth plus a retry loop: a numeric root that lands on an exact
    # integer (possible when the trailing coefficient was too big to
    # divisor-scan) is deflated exactly and the remainder re-solved.
    while len(coeffs) > 1:
        approx = _aberth_double(coeffs)
        exact_hit = False
        for z in approx:
            cand = round(z.real)
            if (abs(z.imag) < CLUSTER_TOL and abs(z.real - cand) < CLUSTER_TOL
                    and _poly_int(coeffs, cand) == 0):
                int_roots.append(cand)
                coeffs = _deflate_int(coeffs, cand)
                exact_hit = True
                break
        if exact_hit:
            continue
        numeric = approx
        break
    int_roots.sort()

    if len(coeffs) <= 1:
        return _assemble(p.degree, int_roots, [], tol)

    # residual against the monic-scaled deflated factor
    dps = max(30, 25 + 2 * len(coeffs) + len(str(max(abs(c) for c in coeffs))))
    def polish_all(points):
        out = []
        for z in points:
            res = _residual_double(coeffs, z)
            if res <= tol:
                out.append((z, res))
            else:
                z2, res2 = _polish_mp(coeffs, z, tol, dps)
                out.append((z2, res2))
        return out

    polished = polish_all(numeric)
    if _collapsed([z for z, _ in polished]):
        # iterates merged onto common points: the double pass lost roots
        # of an ill-conditioned polynomial, so redo the solve entirely in
        # arbitrary precision
        solved = _solve_mp(coeffs)
        if solved is not None:
            polished = polish_all(solved)
    worst = max(res for _, res in polished)
    if worst > tol:
        bad = max(polished, key=lambda t: t[1])
        raise ConvergenceFailure(
            "residual %.3g above tolerance %.3g" % (worst, tol),
            best=bad[0], residual=bad[1])
    return _assemble(p.degree, int_roots, polished, tol)


def _residual_double(coeffs, z):
    lead = float(coeffs[-1])
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + float(c) / lead
    return abs(acc)


def _assemble(source_degree, int_roots, polished, tol):
    clusters = []
    for z, res in polished:
        for cl in clusters:
            if abs(z - cl[0][0]) <= CLUSTER_TOL:
                cl.append((z, res))
                break
        else:
            clusters.append([(z, res)])
    reals, upper, lower = [], [], []
    for cl in clusters:
        zc = sum(z for z, _ in cl) / len(cl)
        res = max(r for _, r in cl)
        if abs(zc.imag) <= CLUSTER_TOL:
            reals.append((zc.real, res, len(cl)))
        elif zc.imag > 0:
            upper.append([zc.real, zc.imag, res, len(cl)])
        else:
            lower.append([zc.real, -zc.imag, res, len(cl)])
    # the coefficients are real, so non-real roots come in conjugate
    # pairs; ill conditioning can push a root and its mirror apart by far
    # more than the cluster tolerance, so fold each lower-half cluster
    # into its nearest upper-half mate instead of position matching
    unmatched = list(range(len(upper)))
    complexes = []
    for re, im, res, m in lower:
        if unmatched:
            best = min(unmatched, key=lambda i: abs(upper[i][0] - re)
                       + abs(upper[i][1] - im))
            unmatched.remove(best)
            ure, uim, ures, um = upper[best]
            complexes.append([(ure + re) / 2, (uim + im) / 2,
                              max(ures, res), max(um, m)])
        else:
            complexes.append([re, im, res, m])
    for i in unmatched:
        complexes.append(upper[i])
    reals.sort()
    complexes.sort()
    return RootSet(
        source_degree=source_degree,
        integer_roots=tuple(int_roots),
        real_roots=tuple(reals),
        complex_roots=tuple(tuple(e) for e in complexes),
    )


def limit_curve_experiment(sizes, shift=0, tol=DEFAULT_TOL):
    """Roots of the complete-bipartite family's bracket factor and their
    horizontal distance to the limiting vertical line Re = 4 + shift.

    shift = 0 is the base family; shift = n adds a red K_n join, which
    translates every root (and the limit line) right by n.  Returns rows
    (size, re, im, residual, distance), conjugates written out.
    """
    from .families import thm45_bracket
    rows = []
    line = 4 + shift
    for n in sizes:
        rs = find_roots(thm45_bracket(n), tol=tol)
        pts = []
        for r in rs.integer_roots:
            pts.append((float(r), 0.0, 0.0))
        for v, res, m in rs.real_roots:
            pts.extend([(v, 0.0, res)] * m)
        for re, im, res, m in rs.complex_roots:
            pts.extend([(re, im, res)] * m)
            pts.extend([(re, -im, res)] * m)
        for re, im, res in sorted(pts):
            re_shifted = re + shift
            rows.append((n, re_shifted, im, res, abs(re_shifted - line)))
    return rows
