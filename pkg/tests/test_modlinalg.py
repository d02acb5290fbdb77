import random
from fractions import Fraction

import pytest

from minorrel.modlinalg import (
    CapacityError,
    PRIMES,
    RankCertificate,
    guard_nonzeros,
    nullspace_mod,
    rank,
    rank_exact,
    rank_mod,
)


def random_sparse_rows(rng, nrows, ncols, density=0.3):
    rows = []
    for _ in range(nrows):
        row = {}
        for j in range(ncols):
            if rng.random() < density:
                row[j] = Fraction(rng.randint(-5, 5))
        rows.append({j: c for j, c in row.items() if c})
    return rows


def test_rank_mod_matches_exact_on_random_matrices():
    rng = random.Random(7)
    p = PRIMES[0]
    for _ in range(25):
        rows = random_sparse_rows(rng, 8, 10)
        assert rank_mod(rows, p) == rank_exact(rows)


def test_rank_exact_with_fractions():
    rows = [{0: Fraction(1, 2), 1: Fraction(1, 3)}, {0: Fraction(3, 2), 1: Fraction(2)}]
    assert rank_exact(rows) == 2
    rows = [{0: Fraction(1, 2), 1: Fraction(1, 3)}, {}]
    rows[1] = {k: 3 * v for k, v in rows[0].items()}
    assert rank_exact(rows) == 1


def test_nullspace_vectors_annihilate_matrix():
    rng = random.Random(11)
    p = PRIMES[1]
    for _ in range(20):
        ncols = 9
        rows = random_sparse_rows(rng, 6, ncols)
        null = nullspace_mod(rows, ncols, p)
        assert len(null) == ncols - rank_mod(rows, p)
        for vec in null:
            for row in rows:
                total = sum(c * vec.get(j, 0) for j, c in row.items()) % p
                assert total == 0


def test_nullspace_of_zero_matrix_is_full():
    p = PRIMES[0]
    null = nullspace_mod([], 4, p)
    assert len(null) == 4


def test_two_prime_rank_certificate():
    rng = random.Random(3)
    rows = random_sparse_rows(rng, 6, 6)
    cert = rank(rows, method="modular", seed=5)
    assert isinstance(cert, RankCertificate)
    assert cert.method == "modular"
    assert len(cert.primes) == 2
    assert all(p in PRIMES for p in cert.primes)
    assert cert.value == rank_exact(rows)
    assert cert.as_dict()["rank"] == cert.value


def test_exact_method_certificate():
    cert = rank([{0: 1}, {0: 2}], method="exact")
    assert cert.value == 1
    assert cert.method == "exact"
    assert cert.primes == ()


def test_deterministic_given_seed():
    rng = random.Random(1)
    rows = random_sparse_rows(rng, 5, 5)
    c1 = rank(rows, method="modular", seed=42)
    c2 = rank(rows, method="modular", seed=42)
    assert c1 == c2


def test_capacity_guard():
    with pytest.raises(CapacityError):
        guard_nonzeros(10**9, "stress test", 10**6)
    guard_nonzeros(10, "small", 10**6)
