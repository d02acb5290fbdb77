"""Sparse exact and modular linear algebra with auditable rank certificates.

Matrices are lists of sparse rows (dict column -> coefficient).  The default
rank method reduces modulo two distinct primes drawn from a fixed public
list by a recorded seed and requires agreement; the exact method runs
fraction-free Gaussian elimination over the rationals.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

# fixed public list of 31-bit primes used by the modular rank oracle
PRIMES = (
    2147483647,
    2147483629,
    2147483587,
    2147483579,
    2147483563,
    2147483549,
    2147483543,
    2147483497,
)

DEFAULT_NONZERO_CAP = 2_000_000


class CapacityError(Exception):
    """A computation would exceed the configured feasibility guard."""


def guard_nonzeros(count, what, cap=DEFAULT_NONZERO_CAP):
    if count > cap:
        raise CapacityError(f"{what}: {count} nonzeros exceeds cap {cap}")


@dataclass(frozen=True)
class RankCertificate:
    value: int
    method: str  # "exact" or "modular"
    primes: tuple = ()
    seed: int = 0

    def as_dict(self):
        return {
            "rank": self.value,
            "method": self.method,
            "primes": list(self.primes),
            "seed": self.seed,
        }


def _reduce_mod(rows, p):
    out = []
    for row in rows:
        new = {}
        for c, v in row.items():
            if isinstance(v, Fraction):
                num = v.numerator % p
                den = v.denominator % p
                if den == 0:
                    raise ZeroDivisionError(f"prime {p} divides a denominator")
                val = num * pow(den, p - 2, p) % p
            else:
                val = v % p
            if val:
                new[c] = val
        if new:
            out.append(new)
    return out


def _eliminate_mod(rows, p):
    """Row-reduce sparse rows mod p; returns (rank, reduced pivot rows)."""
    pivots = {}  # col -> row dict with that pivot, pivot value 1
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c in pivots:
                coef = row.pop(c)
                for cc, vv in pivots[c].items():
                    if cc == c:
                        continue
                    row[cc] = (row.get(cc, 0) - coef * vv) % p
                    if not row[cc]:
                        del row[cc]
            else:
                inv = pow(row[c], p - 2, p)
                row = {cc: vv * inv % p for cc, vv in row.items()}
                pivots[c] = row
                break
    return len(pivots), pivots


def rank_mod(rows, p):
    return _eliminate_mod(_reduce_mod(rows, p), p)[0]


def nullspace_mod(rows, ncols, p):
    """Basis of the right kernel mod p, as sparse dicts over range(ncols)."""
    _, pivots = _eliminate_mod(_reduce_mod(rows, p), p)
    # back-substitute to full reduced echelon form
    cols = sorted(pivots)
    for i in range(len(cols) - 1, -1, -1):
        c = cols[i]
        row = pivots[c]
        for cc in [x for x in row if x != c and x in pivots]:
            coef = row.pop(cc)
            for c2, v2 in pivots[cc].items():
                if c2 == cc:
                    continue
                row[c2] = (row.get(c2, 0) - coef * v2) % p
                if not row[c2]:
                    del row[c2]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = {f: 1}
        for c, row in pivots.items():
            v = row.get(f, 0)
            if v:
                vec[c] = (-v) % p
        basis.append(vec)
    return basis


def rank_exact(rows):
    """Exact rank over the rationals by sparse Gaussian elimination."""
    pivots = {}
    for row in rows:
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            c = min(row)
            if c in pivots:
                coef = row.pop(c)
                for cc, vv in pivots[c].items():
                    if cc == c:
                        continue
                    row[cc] = row.get(cc, 0) - coef * vv
                    if not row[cc]:
                        del row[cc]
            else:
                inv = 1 / row[c]
                row = {cc: vv * inv for cc, vv in row.items()}
                pivots[c] = row
                break
    return len(pivots)


def rank(rows, method="modular", seed=0):
    """Rank with a certificate.

    Modular method: two distinct primes chosen by the seed from the public
    list; ranks must agree or an ArithmeticError is raised.
    """
    rows = [r for r in rows if r]
    if method == "exact":
        return RankCertificate(rank_exact(rows), "exact")
    if method != "modular":
        raise ValueError(f"unknown rank method {method!r}")
    rng = random.Random(seed)
    p1, p2 = rng.sample(PRIMES, 2)
    r1 = rank_mod(rows, p1)
    r2 = rank_mod(rows, p2)
    if r1 != r2:
        raise ArithmeticError(f"modular ranks disagree: {r1} (p={p1}) vs {r2} (p={p2})")
    return RankCertificate(r1, "modular", (p1, p2), seed)
