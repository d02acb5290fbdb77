"""Degreewise linear-algebra witnesses: relation spaces, Koszul homology,
and presentations of the Veronese filtration quotients.

Everything is computed per torus-weight block: each minor/permanent (and
each generator used below) is homogeneous for the torus of GL(V1) x GL(V2),
so kernel and rank computations split into many small independent blocks.
Ranks run modulo two seeded primes (with required agreement) or exactly.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import factorial

from . import modlinalg
from .modlinalg import (
    DEFAULT_NONZERO_CAP,
    CapacityError,
    guard_nonzeros,
    nullspace_mod,
    rank_mod,
)
from .polyring import (
    minors_basis,
    monomial,
    permanents_basis,
    poly_mul,
    x_weight,
)

import random


def _modval(c, p):
    c = Fraction(c)
    if c.denominator == 1:
        return c.numerator % p
    return c.numerator % p * pow(c.denominator % p, p - 2, p) % p


def generators_for(ctx, variant):
    if variant == "minors":
        return minors_basis(ctx)
    if variant == "permanents":
        return permanents_basis(ctx)
    raise ValueError(f"unknown variant {variant!r}")


def _gen_weight(ctx, g, tag):
    """Common torus weight of all monomials of g; zero polys get a tag weight."""
    if not g:
        return ("zero", tag)
    weights = {x_weight(ctx, exp) for exp in g}
    if len(weights) != 1:
        raise ValueError("generator is not weight-homogeneous")
    return ("wt",) + weights.pop()


def _add_weights(w1, w2):
    if w1[0] == "zero" or w2[0] == "zero":
        return ("zero", (w1, w2))
    return ("wt", tuple(a + b for a, b in zip(w1[1], w2[1])), tuple(
        a + b for a, b in zip(w1[2], w2[2])
    ))


class _KernelPipeline:
    """Per-prime state for graded kernel / minimal generator computations.

    Source basis elements are multisets of generator indices; kernels are
    stored per degree as lists of sparse vectors keyed by multiset.
    """

    def __init__(self, ctx, gens, prime, cap=DEFAULT_NONZERO_CAP):
        self.ctx = ctx
        self.gens = gens
        self.p = prime
        self.cap = cap
        self.weights = [_gen_weight(ctx, g, i) for i, g in enumerate(gens)]
        self.products = {(): monomial(ctx, [])}
        self.kernels = {0: []}

    def _product(self, ms):
        if ms not in self.products:
            prev = self._product(ms[:-1])
            self.products[ms] = poly_mul(self.ctx, prev, self.gens[ms[-1]])
        return self.products[ms]

    def _blocks(self, d):
        blocks = {}
        for ms in combinations_with_replacement(range(len(self.gens)), d):
            w = self.weights[ms[0]]
            for k in ms[1:]:
                w = _add_weights(w, self.weights[k])
            blocks.setdefault(w, []).append(ms)
        return blocks

    def kernel(self, d):
        """Kernel vectors of Sym^d(source) -> polynomials, mod p."""
        if d in self.kernels:
            return self.kernels[d]
        vectors = []
        nnz = 0
        for members in self._blocks(d).values():
            # transposed orientation: rows indexed by monomials, columns by
            # multisets, so nullspace vectors live on the multisets
            cols = {ms: i for i, ms in enumerate(members)}
            rows = {}
            for ms in members:
                for exp, c in self._product(ms).items():
                    rows.setdefault(exp, {})[cols[ms]] = _modval(c, self.p)
                    nnz += 1
            guard_nonzeros(nnz, "kernel matrix", self.cap)
            for vec in nullspace_mod(list(rows.values()), len(members), self.p):
                vectors.append({members[i]: v for i, v in vec.items()})
        self.kernels[d] = vectors
        return vectors

    def min_gens(self, d):
        """dim ker_d minus the rank of (generators * ker_{d-1}) inside it."""
        kd = len(self.kernel(d))
        prev = self.kernel(d - 1)
        if not prev:
            return kd
        index = {}
        shifted = []
        for vec in prev:
            for k in range(len(self.gens)):
                row = {}
                for ms, c in vec.items():
                    key = tuple(sorted(ms + (k,)))
                    idx = index.setdefault(key, len(index))
                    row[idx] = (row.get(idx, 0) + c) % self.p
                row = {i: v for i, v in row.items() if v}
                if row:
                    shifted.append(row)
        return kd - rank_mod(shifted, self.p)


def presentation_dims(ctx, gens, d_max, seed=0, cap=DEFAULT_NONZERO_CAP):
    """Graded kernel and minimal-generator dimensions of Sym(gens) -> ring.

    Returns {d: (kernel_dim, min_gen_dim)} for 1 <= d <= d_max.  The whole
    pipeline runs modulo two seeded primes and the results must agree.
    """
    rng = random.Random(seed)
    p1, p2 = rng.sample(modlinalg.PRIMES, 2)
    results = []
    for p in (p1, p2):
        pipe = _KernelPipeline(ctx, gens, p, cap)
        res = {}
        for d in range(1, d_max + 1):
            res[d] = (len(pipe.kernel(d)), pipe.min_gens(d))
        results.append(res)
    if results[0] != results[1]:
        raise ArithmeticError(
            f"modular pipelines disagree (primes {p1}, {p2}): {results}"
        )
    return results[0]


def relation_dims(ctx, variant, d_max, seed=0, cap=DEFAULT_NONZERO_CAP):
    """Relations between the 2x2 minors (or permanents) of the generic matrix.

    For each degree d: the kernel dimension of Sym^d(W) -> S_{2d} and the
    dimension of the minimal generators of the relation ideal in degree d.
    """
    if d_max < 2:
        raise ValueError("d_max must be >= 2")
    gens = generators_for(ctx, variant)
    return presentation_dims(ctx, gens, d_max, seed=seed, cap=cap)


# ---------------------------------------------------------------------------
# Koszul homology H_1 of the quadric space W (or its permanent analogue)


def _monomials_of_degree(nvars, d):
    """Exponent tuples of total degree d."""
    if d == 0:
        yield (0,) * nvars
        return
    for split in combinations_with_replacement(range(nvars), d):
        exp = [0] * nvars
        for i in split:
            exp[i] += 1
        yield tuple(exp)


def koszul_h1_blocks(ctx, variant, d, seed=0, cap=DEFAULT_NONZERO_CAP):
    """Weight-resolved H_1 dims of the Koszul complex of W in total degree d.

    Returns {weight: dim} where weight = (row sums, column sums); the total
    H_1 dimension is the sum of all values.  Runs mod two seeded primes.
    """
    if d < 2:
        raise ValueError("degree must be >= 2")
    gens = generators_for(ctx, variant)
    N = len(gens)
    gw = [_gen_weight(ctx, g, i) for i, g in enumerate(gens)]
    rng = random.Random(seed)
    primes = rng.sample(modlinalg.PRIMES, 2)
    per_prime = []
    for p in primes:
        # basis of W (x) S_{d-2}: (k, monomial); group by weight
        blocks = {}
        for k in range(N):
            for exp in _monomials_of_degree(ctx.num_vars, d - 2):
                w = _add_weights(gw[k], ("wt",) + x_weight(ctx, exp))
                blocks.setdefault(w, []).append((k, exp))
        # boundary d1 images: w_k * x^exp, a polynomial of degree d
        rank1 = {}
        nnz = 0
        for w, members in blocks.items():
            colmap = {}
            rows1 = []
            for k, exp in members:
                row = {}
                for e2, c in gens[k].items():
                    key = tuple(a + b for a, b in zip(e2, exp))
                    idx = colmap.setdefault(key, len(colmap))
                    row[idx] = _modval(c, p)
                nnz += len(row)
                rows1.append(row)
            guard_nonzeros(nnz, "Koszul d1 matrix", cap)
            rank1[w] = rank_mod(rows1, p)
        # boundary d2 images: for k<l and x^m of degree d-4:
        #   (k, w_l * m) with +coeffs and (l, w_k * m) with -coeffs
        pair_index = {w: {kv: i for i, kv in enumerate(members)} for w, members in blocks.items()}
        rank2 = {w: 0 for w in blocks}
        if d >= 4:
            d2rows = {w: [] for w in blocks}
            nnz2 = 0
            for k in range(N):
                for l in range(k + 1, N):
                    w_kl = _add_weights(gw[k], gw[l])
                    for mexp in _monomials_of_degree(ctx.num_vars, d - 4):
                        w = _add_weights(w_kl, ("wt",) + x_weight(ctx, mexp))
                        idx = pair_index.get(w)
                        if idx is None:
                            continue
                        row = {}
                        for e2, c in gens[l].items():
                            key = (k, tuple(a + b for a, b in zip(e2, mexp)))
                            row[idx[key]] = (row.get(idx[key], 0) + int(c)) % p
                        for e2, c in gens[k].items():
                            key = (l, tuple(a + b for a, b in zip(e2, mexp)))
                            row[idx[key]] = (row.get(idx[key], 0) - int(c)) % p
                        row = {i: v for i, v in row.items() if v}
                        nnz2 += len(row)
                        if row:
                            d2rows[w].append(row)
            guard_nonzeros(nnz2, "Koszul d2 matrix", cap)
            for w, rows in d2rows.items():
                if rows:
                    rank2[w] = rank_mod(rows, p)
        result = {}
        for w, members in blocks.items():
            h1 = len(members) - rank1[w] - rank2[w]
            if h1:
                result[(w[1], w[2])] = h1
        per_prime.append(result)
    if per_prime[0] != per_prime[1]:
        raise ArithmeticError(f"modular Koszul results disagree: {per_prime}")
    return per_prime[0]


def koszul_h1_dim(ctx, variant, d, seed=0, cap=DEFAULT_NONZERO_CAP):
    """Total dimension of the first Koszul homology of W in degree d."""
    return sum(koszul_h1_blocks(ctx, variant, d, seed=seed, cap=cap).values())


# ---------------------------------------------------------------------------
# The Veronese filtration quotients M_r / M_{r-1}


def _sym_power_generators(ctx, c):
    """Basis of Sym^{2c}V1 (x) Sym^{2c}V2 inside the degree-2c polynomials.

    Indexed by pairs (alpha, beta) of exponent vectors of size 2c on the rows
    and columns; the vector is sum over matrices A with row sums alpha and
    column sums beta of (2c)!/prod(A!) x^A.
    """
    D = 2 * c
    out = []
    for alpha in _compositions(D, ctx.m):
        for beta in _compositions(D, ctx.n):
            terms = {}
            for A in _matrices_with_margins(alpha, beta):
                coeff = factorial(D)
                exp = [0] * ctx.num_vars
                for i in range(ctx.m):
                    for j in range(ctx.n):
                        coeff //= factorial(A[i][j])
                        exp[ctx.x_index(i + 1, j + 1)] = A[i][j]
                terms[tuple(exp)] = coeff
            out.append(terms)
    return out


def _wedge_power_generators(ctx, c):
    """Spanning set of wedge^{2c}V1 (x) wedge^{2c}V2: the 2c x 2c minors."""
    D = 2 * c
    out = []
    for rows in combinations(range(1, ctx.m + 1), D):
        for cols in combinations(range(1, ctx.n + 1), D):
            terms = {}
            from itertools import permutations

            for perm in permutations(range(D)):
                sign = 1
                for a in range(D):
                    for b in range(a + 1, D):
                        if perm[a] > perm[b]:
                            sign = -sign
                exp = [0] * ctx.num_vars
                for a in range(D):
                    exp[ctx.x_index(rows[a], cols[perm[a]])] += 1
                key = tuple(exp)
                terms[key] = terms.get(key, 0) + sign
            terms = {k: v for k, v in terms.items() if v}
            if terms:
                out.append(terms)
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _matrices_with_margins(alpha, beta):
    """Nonnegative integer matrices with given row and column sums."""
    m, n = len(alpha), len(beta)

    def rec(i, remaining_cols):
        if i == m:
            if all(x == 0 for x in remaining_cols):
                yield []
            return
        for row in _rows_with_sum(alpha[i], remaining_cols):
            new_cols = tuple(c - r for c, r in zip(remaining_cols, row))
            for rest in rec(i + 1, new_cols):
                yield [row] + rest

    yield from rec(0, tuple(beta))


def _rows_with_sum(total, caps):
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    for first in range(min(total, caps[0]) + 1):
        for rest in _rows_with_sum(total - first, caps[1:]):
            yield (first,) + rest


def filtration_generator_space(ctx, variant, c):
    """Generator space of the c-th filtration step as explicit polynomials."""
    if c == 0:
        return [monomial(ctx, [])]
    if variant == "minors":
        return _sym_power_generators(ctx, c)
    if variant == "permanents":
        return _wedge_power_generators(ctx, c)
    raise ValueError(f"unknown variant {variant!r}")


def _span_rows_mod(polys, colmap, p):
    rows = []
    for f in polys:
        row = {}
        for exp, cval in f.items():
            idx = colmap.setdefault(exp, len(colmap))
            row[idx] = int(cval) % p
        row = {i: v for i, v in row.items() if v}
        if row:
            rows.append(row)
    return rows


def _module_component(ctx, variant, r, D, cache, gens):
    """Spanning polynomials of the degree-D piece of M_r (degree 2D in x)."""
    out = []
    for c in range(0, min(r, D) + 1):
        gspace = filtration_generator_space(ctx, variant, c)
        for ms in combinations_with_replacement(range(len(gens)), D - c):
            prod = _multiset_product(ctx, gens, ms, cache)
            for g in gspace:
                out.append(poly_mul(ctx, g, prod))
    return out


def _multiset_product(ctx, gens, ms, cache):
    if ms in cache:
        return cache[ms]
    if not ms:
        cache[ms] = monomial(ctx, [])
    else:
        cache[ms] = poly_mul(ctx, _multiset_product(ctx, gens, ms[:-1], cache), gens[ms[-1]])
    return cache[ms]


def veronese_presentation_dims(ctx, variant, r, d_max, seed=0, cap=DEFAULT_NONZERO_CAP):
    """Generator and first-relation dimensions of M_r/M_{r-1} by degree.

    Returns {"generators": {D: dim}, "relations": {D: dim}} for D <= d_max.
    Generators: dim M_{r,D} - dim(M_{r-1,D} + W*M_{r,D-1}).  Relations: the
    minimal generators of the kernel of the presentation G_r (x) R -> M_r/M_{r-1}.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    gens = generators_for(ctx, variant)
    rng = random.Random(seed)
    primes = rng.sample(modlinalg.PRIMES, 2)
    per_prime = []
    for p in primes:
        cache = {}
        spans = {}

        def span_rank(polys, tag):
            colmap = {}
            rows = _span_rows_mod(polys, colmap, p)
            guard_nonzeros(sum(len(rw) for rw in rows), f"veronese {tag}", cap)
            return rank_mod(rows, p)

        gen_dims = {}
        for D in range(0, d_max + 1):
            mr = _module_component(ctx, variant, r, D, cache, gens)
            mr1 = _module_component(ctx, variant, r - 1, D, cache, gens)
            sub = list(mr1)
            if D >= 1:
                prev = _module_component(ctx, variant, r, D - 1, cache, gens)
                for w in gens:
                    sub.extend(poly_mul(ctx, w, f) for f in prev)
            dim_mr = span_rank(mr, f"M_r deg {D}")
            dim_sub = span_rank(sub, f"submodule deg {D}")
            gen_dims[D] = dim_mr - dim_sub
        rel_dims = _veronese_relations(ctx, variant, r, d_max, gens, cache, p, cap)
        per_prime.append({"generators": gen_dims, "relations": rel_dims})
    if per_prime[0] != per_prime[1]:
        raise ArithmeticError(f"modular veronese results disagree: {per_prime}")
    return per_prime[0]


def _veronese_relations(ctx, variant, r, d_max, gens, cache, p, cap):
    """Minimal generators, by degree, of the presentation kernel of M_r/M_{r-1}."""
    gspace = filtration_generator_space(ctx, variant, r)
    kernels = {}
    rel = {}
    for D in range(r, d_max + 1):
        e = D - r
        # source basis: (generator index, multiset of the quadric basis)
        source = [
            (gi, ms)
            for gi in range(len(gspace))
            for ms in combinations_with_replacement(range(len(gens)), e)
        ]
        colmap = {}
        ncols = len(source)
        col_of = {s: i for i, s in enumerate(source)}
        rows = {}
        nnz = 0
        for s in source:
            gi, ms = s
            f = poly_mul(ctx, gspace[gi], _multiset_product(ctx, gens, ms, cache))
            for exp, cval in f.items():
                rows.setdefault(exp, {})[col_of[s]] = int(cval) % p
                nnz += 1
        # quotient by M_{r-1,D}: extra columns carrying its spanning vectors
        sub = _module_component(ctx, variant, r - 1, D, cache, gens)
        extra_start = ncols
        for f in sub:
            ci = extra_start
            extra_start += 1
            for exp, cval in f.items():
                rows.setdefault(exp, {})[ci] = int(cval) % p
                nnz += 1
        guard_nonzeros(nnz, f"veronese relations deg {D}", cap)
        null = nullspace_mod(list(rows.values()), extra_start, p)
        projected = []
        for vec in null:
            v = {i: c for i, c in vec.items() if i < ncols}
            if v:
                projected.append(v)
        z_dim = rank_mod(projected, p)
        kernels[D] = (projected, col_of, source)
        if D == r:
            rel[D] = z_dim
            continue
        prev_vectors, prev_col_of, prev_source = kernels[D - 1]
        # lift the spanning set of Z_{D-1}, multiply by each quadric, re-index
        shifted = []
        for vec in prev_vectors:
            for k in range(len(gens)):
                row = {}
                for ci, cval in vec.items():
                    gi, ms = prev_source[ci]
                    key = (gi, tuple(sorted(ms + (k,))))
                    idx = col_of[key]
                    row[idx] = (row.get(idx, 0) + cval) % p
                row = {i: v for i, v in row.items() if v}
                if row:
                    shifted.append(row)
        rel[D] = z_dim - rank_mod(shifted, p)
    return rel


# ---------------------------------------------------------------------------
# The subspace variety inside the space of permanents


def subspace_parameterization(m, n):
    """Images of the y-coordinates under the incidence parameterization.

    The variety is the locus of elements of Sym^2(C^m) (x) Sym^2(C^n) lying
    in Sym^2(H) (x) Sym^2(C^n) for some hyperplane H.  Parameters: an
    m x (m-1) matrix h and z in Sym^2(C^{m-1}) (x) Sym^2(C^n).  Returns
    (images, weights): for each y-coordinate (i<=i', j<=j'), the polynomial
    in the (h, z) variables, and its torus weight key.
    """
    # parameter variable indexing: h[i][k] (i < m, k < m-1), then z[(k,k'),(j,j')]
    hvar = {}
    for i in range(m):
        for k in range(max(m - 1, 0)):
            hvar[(i, k)] = len(hvar)
    zpairs1 = [(k, k2) for k in range(max(m - 1, 0)) for k2 in range(k, m - 1)]
    zpairs2 = [(j, j2) for j in range(n) for j2 in range(j, n)]
    zvar = {}
    for a in zpairs1:
        for b in zpairs2:
            zvar[(a, b)] = len(hvar) + len(zvar)
    nvars = len(hvar) + len(zvar)
    images = []
    weights = []
    ys = [((i, i2), (j, j2)) for i in range(m) for i2 in range(i, m) for j in range(n) for j2 in range(j, n)]
    for (i, i2), (j, j2) in ys:
        terms = {}
        for (k, k2) in zpairs1:
            zc = zvar[((k, k2), (j, j2))]
            # (h_i (.) h_i2) paired with z_{kk'}: symmetrized product
            combos = [(k, k2)] if k == k2 else [(k, k2), (k2, k)]
            for ka, kb in combos:
                exp = [0] * nvars
                exp[hvar[(i, ka)]] += 1
                exp[hvar[(i2, kb)]] += 1
                exp[zc] += 1
                key = tuple(exp)
                terms[key] = terms.get(key, 0) + 1
        terms = {k2: v for k2, v in terms.items() if v}
        row_w = [0] * m
        row_w[i] += 1
        row_w[i2] += 1
        col_w = [0] * n
        col_w[j] += 1
        col_w[j2] += 1
        images.append(terms)
        weights.append((tuple(row_w), tuple(col_w)))
    return images, weights, nvars, ys


def subspace_variety_gens(m, n, d_max=None, seed=0, cap=DEFAULT_NONZERO_CAP):
    """Minimal generator counts, by degree, of the ideal of the subspace variety.

    Computes the kernel of the parameterization pullback degree by degree and
    subtracts the span of shifted lower-degree kernel elements.
    """
    if d_max is None:
        d_max = m + 1
    images, weights, nvars, ys = subspace_parameterization(m, n)
    rng = random.Random(seed)
    primes = rng.sample(modlinalg.PRIMES, 2)
    per_prime = []
    for p in primes:
        res = _subspace_pipeline(images, weights, d_max, p, cap)
        per_prime.append(res)
    if per_prime[0] != per_prime[1]:
        raise ArithmeticError(f"modular subspace results disagree: {per_prime}")
    return per_prime[0]


def _subspace_pipeline(images, weights, d_max, p, cap):
    N = len(images)
    products = {(): {(): 1}}

    def product(ms):
        if ms not in products:
            prev = product(ms[:-1])
            g = images[ms[-1]]
            out = {}
            for e1, c1 in prev.items():
                for e2, c2 in g.items():
                    if e1 == ():
                        exp = e2
                    else:
                        exp = tuple(a + b for a, b in zip(e1, e2))
                    out[exp] = (out.get(exp, 0) + c1 * c2) % p
            products[ms] = {k: v for k, v in out.items() if v}
        return products[ms]

    def ms_weight(ms):
        rw = None
        cw = None
        for k in ms:
            r2, c2 = weights[k]
            if rw is None:
                rw, cw = list(r2), list(c2)
            else:
                rw = [a + b for a, b in zip(rw, r2)]
                cw = [a + b for a, b in zip(cw, c2)]
        return (tuple(rw), tuple(cw))

    kernels = {0: []}
    result = {}
    for d in range(1, d_max + 1):
        blocks = {}
        for ms in combinations_with_replacement(range(N), d):
            blocks.setdefault(ms_weight(ms), []).append(ms)
        vectors = []
        nnz = 0
        for members in blocks.values():
            cols = {ms: i for i, ms in enumerate(members)}
            rows = {}
            for ms in members:
                f = product(ms)
                for exp, c in f.items():
                    rows.setdefault(exp, {})[cols[ms]] = c
                    nnz += 1
            guard_nonzeros(nnz, "subspace kernel", cap)
            for vec in nullspace_mod(list(rows.values()), len(members), p):
                vectors.append({members[i]: v for i, v in vec.items()})
        kernels[d] = vectors
        prev = kernels[d - 1]
        if not prev:
            result[d] = len(vectors)
            continue
        index = {}
        shifted = []
        for vec in prev:
            for k in range(N):
                row = {}
                for ms, c in vec.items():
                    key = tuple(sorted(ms + (k,)))
                    idx = index.setdefault(key, len(index))
                    row[idx] = (row.get(idx, 0) + c) % p
                row = {i: v for i, v in row.items() if v}
                if row:
                    shifted.append(row)
        result[d] = len(vectors) - rank_mod(shifted, p)
    return {d: v for d, v in result.items()}
