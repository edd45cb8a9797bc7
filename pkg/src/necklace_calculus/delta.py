"""Monotone maps in the simplex category and Eilenberg-Zilber word arithmetic.

A monotone map mu: [a] -> [b] is stored as the tuple (mu(0), ..., mu(a)).
Degeneracy words are strictly decreasing tuples (i_1 > ... > i_p); the word
w applied to a simplex x means s_{i_1} s_{i_2} ... s_{i_p} x.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

Monotone = tuple[int, ...]
Word = tuple[int, ...]


@lru_cache(maxsize=None)
def identity(m: int) -> Monotone:
    return tuple(range(m + 1))


@lru_cache(maxsize=None)
def coface(i: int, m: int) -> Monotone:
    """delta^i: [m-1] -> [m], skipping i."""
    return tuple(j for j in range(m + 1) if j != i)


@lru_cache(maxsize=None)
def codegeneracy(i: int, m: int) -> Monotone:
    """sigma^i: [m+1] -> [m], hitting i twice."""
    return tuple(j if j <= i else j - 1 for j in range(m + 2))


def vertex_map(v: int) -> Monotone:
    """<v>: [0] -> [m]."""
    return (v,)


def interval_map(vs) -> Monotone:
    """The mono picking the listed vertices (must be strictly increasing)."""
    vs = tuple(vs)
    if any(vs[i] >= vs[i + 1] for i in range(len(vs) - 1)):
        raise ValueError(f"not strictly increasing: {vs}")
    return vs


def compose(outer: Monotone, inner: Monotone) -> Monotone:
    """outer after inner."""
    return tuple(outer[v] for v in inner)


def is_monotone(mu: Monotone, target_dim: int) -> bool:
    return all(0 <= v <= target_dim for v in mu) and all(
        mu[i] <= mu[i + 1] for i in range(len(mu) - 1)
    )


def is_mono(mu: Monotone) -> bool:
    return all(mu[i] < mu[i + 1] for i in range(len(mu) - 1))


def is_epi(mu: Monotone, target_dim: int) -> bool:
    return set(mu) == set(range(target_dim + 1))


@lru_cache(maxsize=None)
def word_to_epi(word: Word, m: int) -> Monotone:
    """The epi [m] ->> [m - len(word)] named by a strictly decreasing word."""
    mu = identity(m)
    d = m
    for i in word:
        mu = compose(codegeneracy(i, d - 1), mu)
        d -= 1
    return mu


def epi_to_word(epi: Monotone) -> Word:
    """Inverse of word_to_epi; positions where the epi repeats, descending."""
    return tuple(sorted((j for j in range(len(epi) - 1) if epi[j] == epi[j + 1]), reverse=True))


@lru_cache(maxsize=None)
def factor(mu: Monotone) -> tuple[Word, Monotone]:
    """Epi-mono factorization: mu = mono . epi, returned as (word, mono)."""
    image = sorted(set(mu))
    rank = {v: r for r, v in enumerate(image)}
    epi = tuple(rank[v] for v in mu)
    return epi_to_word(epi), tuple(image)


@lru_cache(maxsize=None)
def merge_words(outer: Word, inner: Word, inner_top_dim: int) -> Word:
    """Word for s_outer(s_inner(x)) where s_inner(x) has dimension inner_top_dim."""
    if not outer:
        return inner
    if not inner:
        return outer
    e_in = word_to_epi(inner, inner_top_dim)
    e_out = word_to_epi(outer, inner_top_dim + len(outer))
    return epi_to_word(compose(e_in, e_out))


@lru_cache(maxsize=None)
def all_words(p: int, top_dim: int) -> list[Word]:
    """All strictly decreasing degeneracy words of length p landing in dim top_dim."""
    return [tuple(sorted(c, reverse=True)) for c in combinations(range(top_dim), p)]
