"""Bott's theorem on projective space and the geometric syzygy computations.

Projective spaces here parameterize one-dimensional quotients: on P(V) with
dim V = n the tautological quotient Q is a line bundle and the sub R has rank
n-1.  A GL-weight (a, lam_1, ..., lam_{n-1}) encodes the bundle
Q^a (x) S_lam(R); the dotted Weyl algorithm produces its unique nonzero
cohomology group (or none).
"""

from .birep import BiRep
from .partitions import canon, partitions_of
from .symfunc import DEFAULT_DEGREE_CAP, conjugate, plethysm_schur, schur_multiply


def bott_weight(w):
    """Dotted-weight algorithm on an arbitrary integer weight sequence.

    Returns (j, dominant_weight) where j is the unique cohomological degree
    with nonzero cohomology, or None when the shifted weight has a repeat.
    """
    n = len(w)
    v = [w[i] + (n - 1 - i) for i in range(n)]
    if len(set(v)) < n:
        return None
    inversions = sum(1 for i in range(n) for k in range(i + 1, n) if v[i] < v[k])
    v.sort(reverse=True)
    dominant = tuple(v[i] - (n - 1 - i) for i in range(n))
    return inversions, dominant


def bott_projective(n, a, lam):
    """Cohomology of Q^a (x) S_lam(R) on the projective space of quotients of C^n.

    Returns a dict j -> weight tuple; at most one key is present (Bott
    dichotomy).  The output weight may have negative entries for very
    negative twists a; in all uses here it is a partition.
    """
    lam = canon(lam)
    if len(lam) > n - 1:
        raise ValueError(f"S_lam(R) needs at most {n - 1} parts, got {lam}")
    w = (a,) + lam + (0,) * (n - 1 - len(lam))
    res = bott_weight(w)
    if res is None:
        return {}
    j, dom = res
    return {j: dom}


def _kunneth(table1, table2):
    """Combine two single-space tables j -> weight into j -> list of pairs."""
    out = {}
    for a, w1 in table1.items():
        for b, w2 in table2.items():
            out.setdefault(a + b, []).append((w1, w2))
    return out


def _xi1_factors(u, cap):
    """Summands of wedge^u(xi_1): pairs (V1-side character, R_2-side partition list).

    xi_1 = wedge^2(V1) (x) wedge^2(R_2) pulled back from the second factor.
    Yields (alpha, left_terms, right_terms) with left_terms = S_alpha(S_11 V1)
    as a dict on V1, right_terms = S_alpha'(S_11 R_2) as a dict of partitions.
    """
    for alpha in partitions_of(u):
        left = plethysm_schur(alpha, (1, 1), cap=cap)
        right = plethysm_schur(conjugate(alpha), (1, 1), cap=cap)
        yield left, right


def _xi2_factors(v, cap):
    """Summands of wedge^v(xi_2): (R_1-side dict, R_2-side dict, Q_2 twist v).

    xi_2 = wedge^2(R_1) (x) (R_2 (x) Q_2), so the second factor contributes
    Q_2^v (x) S_beta'(R_2).
    """
    for beta in partitions_of(v):
        left = plethysm_schur(beta, (1, 1), cap=cap)
        right = {conjugate(beta): 1}
        yield left, right


def _wedge_xi_summands(u, v, m, n, cap):
    """Composition factors of L^0 (x) wedge^u(xi_1) (x) wedge^v(xi_2).

    Yields (trivial V1 character dict, R_1 partition dict, R_2 partition dict,
    Q_2 extra twist).  The trivial factor is a genuine GL(V1) representation
    not affected by cohomology.
    """
    for a_left, a_right in _xi1_factors(u, cap):
        for b_left, b_right in _xi2_factors(v, cap):
            # R_2 side combines S_alpha'(S_11 R_2) with S_beta'(R_2)
            r2 = {}
            for lam1, c1 in a_right.items():
                for lam2, c2 in b_right.items():
                    for mu, c in schur_multiply(lam1, lam2).terms.items():
                        r2[mu] = r2.get(mu, 0) + c1 * c2 * int(c)
            yield a_left, b_left, r2, v


def verify_lemma_4_4(u, v, j, r, m, n, cap=DEFAULT_DEGREE_CAP):
    """Check H^j(X, L^{2r} (x) wedge^u(xi_1) (x) wedge^v(xi_2)) = 0.

    X = P(V1) x P(V2).  Expands both wedge powers by Cauchy/plethysm, applies
    Bott on each projective factor and combines with Kunneth.
    """
    if u < 0 or v < 0 or j < 1 or r < 1:
        raise ValueError("need u,v >= 0 and j,r >= 1")
    for _triv, r1_terms, r2_terms, twist in _wedge_xi_summands(u, v, m, n, cap):
        for lam in r1_terms:
            if len(lam) > m - 1:
                continue
            t1 = bott_projective(m, 2 * r, lam)
            if not t1:
                continue
            for mu in r2_terms:
                if len(mu) > n - 1:
                    continue
                t2 = bott_projective(n, 2 * r + twist, mu)
                for total in _kunneth(t1, t2):
                    if total == j:
                        return False
    return True


def tor_geometric(i, r, m, n, cap=DEFAULT_DEGREE_CAP):
    """Upper bound for Tor_i of the r-th filtration quotient, graded by degree.

    Uses the identity Tor_i(N_r)_{r+i+j} = H^j(X, wedge^{i+j}(xi) (x) L^{2r})
    together with the filtration of wedge^{i+j}(xi) by
    wedge^u(xi_1) (x) wedge^v(xi_2) with u+v = i+j.  Returns a dict
    degree -> BiRep of the associated-graded cohomology (an upper bound for
    the actual Tor character).
    """
    if i not in (0, 1, 2):
        raise ValueError("only homological indices 0, 1, 2 are supported")
    out = {}
    jmax = (m - 1) + (n - 1)
    for j in range(0, jmax + 1):
        k = i + j
        acc = {}
        for u in range(0, k + 1):
            v = k - u
            for triv, r1_terms, r2_terms, twist in _wedge_xi_summands(u, v, m, n, cap):
                for lam, c_lam in r1_terms.items():
                    if len(lam) > m - 1:
                        continue
                    t1 = bott_projective(m, 2 * r, lam)
                    if not t1:
                        continue
                    for mu, c_mu in r2_terms.items():
                        if len(mu) > n - 1:
                            continue
                        t2 = bott_projective(n, 2 * r + twist, mu)
                        if not t2:
                            continue
                        (a, w1), = t1.items()
                        (b, w2), = t2.items()
                        if a + b != j:
                            continue
                        if len(canon(w2)) > n:
                            continue
                        # fold in the trivial GL(V1) factor S_triv(wedge^2 V1)
                        for gam, c_gam in triv.items():
                            for w1f, c_f in schur_multiply(gam, w1).terms.items():
                                if len(w1f) > m:
                                    continue
                                key = (w1f, canon(w2))
                                acc[key] = (
                                    acc.get(key, 0)
                                    + c_lam * c_mu * c_gam * int(c_f)
                                )
        if acc:
            out[r + i + j] = BiRep(acc)
    return out


def lemma_4_3_character(r, d, m, n):
    """Degree-(r+d) character of the r-th filtration quotient via Bott.

    Computes H^0 of L^{2r} (x) Sym^d(eta) summand by summand:
    each mu |- d contributes S_{(d+2r, mu)}V1 (x) S_{(d+2r, mu)}V2 when mu
    fits in both tautological subbundles.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    out = {}
    for mu in partitions_of(d):
        if len(mu) > m - 1 or len(mu) > n - 1:
            continue
        t1 = bott_projective(m, d + 2 * r, mu)
        t2 = bott_projective(n, d + 2 * r, mu)
        if 0 not in t1 or 0 not in t2:
            continue
        out[(canon(t1[0]), canon(t2[0]))] = 1
    return BiRep(out)
