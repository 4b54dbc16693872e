"""Group-theoretic re-derivation of the decomposition shapes.

Gal(S/Q) is modelled as the metacyclic group of pairs (c, s), c in F_p and
s in Z/(p-1), standing for theta^c sigma_mu^s with

    (c1, s1) * (c2, s2) = (c1 + w^s1 c2, s1 + s2),   w = v * mu^-1,

i.e. sigma_mu theta sigma_mu^-1 = theta^w. Primes of a subfield S^H above p
correspond to double cosets H \\ G / D, where D and I are the decomposition and
inertia groups of a fixed prime of S above p. Everything is computed by
enumeration; the closed forms in :mod:`cyclodecomp.decomp` are never consulted.

Elements are encoded as integers ``c * (p - 1) + s`` so that subgroups,
cosets and conjugates become numpy index arithmetic.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .decomp import CaseParams, DecompShape, PrimeEntry, conjugation_multiplier, decompose
from .errors import ValidationError
from .fp import mult_order, primes_between, smallest_primitive_root

__all__ = [
    "GroupElement",
    "MetacyclicGroup",
    "SubgroupData",
    "build_group",
    "sigma_orbits_on_primes",
    "double_coset_shapes",
    "oracle_decompose",
    "ORACLE_EXTENSIONS",
    "check_orbit_structure",
    "verify_params",
    "verify_sweep",
]

ORACLE_EXTENSIONS = ("K/Q", "S/K", "S/Q", "M/Q")


@dataclass(frozen=True)
class GroupElement:
    """theta^c sigma_mu^s, with structure constant w."""

    p: int
    w: int
    c: int
    s: int

    def __mul__(self, other: GroupElement) -> GroupElement:
        if (self.p, self.w) != (other.p, other.w):
            raise ValidationError("elements of different groups")
        p = self.p
        return GroupElement(p, self.w, (self.c + pow(self.w, self.s, p) * other.c) % p, (self.s + other.s) % (p - 1))

    def inverse(self) -> GroupElement:
        p = self.p
        s = (-self.s) % (p - 1)
        return GroupElement(p, self.w, -pow(self.w, s, p) * self.c % p, s)


class MetacyclicGroup:
    def __init__(self, p: int, w: int) -> None:
        if w % p == 0:
            raise ValidationError("w must be a unit mod p")
        self.p = p
        self.w = w % p
        self.m = p - 1
        self.order = p * (p - 1)
        self.wpow = np.array([pow(self.w, s, p) for s in range(self.m)], dtype=np.int64)
        self.identity = 0
        self.theta = self.encode(1, 0)
        self.sigma = self.encode(0, 1)

    def encode(self, c, s):
        return (np.asarray(c) % self.p) * self.m + np.asarray(s) % self.m

    def decode(self, x):
        x = np.asarray(x)
        return x // self.m, x % self.m

    def element(self, x: int) -> GroupElement:
        c, s = self.decode(x)
        return GroupElement(self.p, self.w, int(c), int(s))

    def index(self, g: GroupElement) -> int:
        return int(self.encode(g.c, g.s))

    def mul(self, a, b):
        """Elementwise product of encoded elements (broadcasting)."""
        c1, s1 = self.decode(a)
        c2, s2 = self.decode(b)
        return self.encode(c1 + self.wpow[s1] * c2, s1 + s2)

    def inv(self, a):
        c, s = self.decode(a)
        s_inv = (-s) % self.m
        return self.encode(-self.wpow[s_inv] * c, s_inv)

    def _orbit_labels(self, perms: Sequence[np.ndarray]) -> np.ndarray:
        """Orbit label of every element under the permutations generated by ``perms``."""
        n = self.order
        k = len(perms)
        if not k:
            return np.arange(n)
        cols = np.stack([np.broadcast_to(q, (n,)) for q in perms], axis=1).ravel()
        indptr = np.arange(0, n * k + 1, k)
        graph = csr_matrix((np.ones(n * k, dtype=np.int8), cols, indptr), shape=(n, n))
        _, labels = connected_components(graph, directed=True, connection="weak")
        return labels

    def subgroup(self, generators: Sequence[int]) -> SubgroupData:
        """The subgroup generated by ``generators``.

        Components of the graph g -> g*x (x a generator) are the left cosets of
        the generated subgroup; the identity's component is the subgroup itself.
        """
        gens = tuple(int(g) for g in generators)
        allg = np.arange(self.order)
        labels = self._orbit_labels([self.mul(allg, g) for g in gens])
        mask = labels == labels[self.identity]
        sub = SubgroupData(self, gens, np.flatnonzero(mask), mask, labels)
        sub.__dict__["is_closed"] = True  # closure by construction
        return sub

    @cached_property
    def whole(self) -> SubgroupData:
        return self.subgroup([self.theta, self.sigma])

    @cached_property
    def trivial(self) -> SubgroupData:
        return self.subgroup([])

    @cached_property
    def sigma_group(self) -> SubgroupData:
        """<sigma_mu>, fixing M."""
        return self.subgroup([self.sigma])

    @cached_property
    def theta_group(self) -> SubgroupData:
        """<theta> = Gal(S/K)."""
        return self.subgroup([self.theta])

    def intersect(self, a: SubgroupData, b: SubgroupData) -> SubgroupData:
        mask = a.mask & b.mask
        for known in (a, b, self.trivial):
            if np.array_equal(known.mask, mask):
                return known
        gens: list[int] = []
        span = self.trivial
        for x in np.flatnonzero(mask).tolist():
            if not span.mask[x]:
                gens.append(x)
                span = self.subgroup(gens)
        assert np.array_equal(span.mask, mask)
        return span


@dataclass(frozen=True, eq=False)
class SubgroupData:
    group: MetacyclicGroup
    generators: tuple[int, ...]
    elements: np.ndarray
    mask: np.ndarray
    coset_labels: np.ndarray  # label of the left coset g*self, for every g

    @property
    def order(self) -> int:
        return int(self.elements.size)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def issubset(self, other: SubgroupData) -> bool:
        return not np.any(self.mask & ~other.mask)

    @cached_property
    def is_closed(self) -> bool:
        """Whether ``elements`` is exactly the subgroup generated by ``generators``."""
        G = self.group
        return bool(np.array_equal(G.subgroup(self.generators).mask, self.mask))


def build_group(p: int, v: int, n: int) -> MetacyclicGroup:
    params = CaseParams(p, v, n)
    return MetacyclicGroup(p, conjugation_multiplier(params))


def sigma_orbits_on_primes(p: int, w: int) -> list[tuple[int, ...]]:
    """Orbits of F_p under i -> w*i: how sigma_mu permutes the primes theta^i(pi_0).

    Orbits are sorted internally and ordered by their least element.
    """
    w %= p
    if w == 0:
        raise ValidationError("w must be nonzero")
    if w == 1:
        raise ValidationError("w = 1 would make sigma_mu fix every prime (mu = v is excluded)")
    seen = [False] * p
    orbits = []
    for start in range(p):
        if seen[start]:
            continue
        orbit = []
        i = start
        while not seen[i]:
            seen[i] = True
            orbit.append(i)
            i = i * w % p
        orbits.append(tuple(sorted(orbit)))
    return orbits


def double_coset_reps(G: SubgroupData, H: SubgroupData, D: SubgroupData) -> np.ndarray:
    """Least encoded element of each double coset H g D inside G.

    Double cosets are the orbits of H acting by left multiplication on the
    left cosets G/D.
    """
    grp = G.group
    labels_in_g = D.coset_labels[G.elements]
    coset_ids, first = np.unique(labels_in_g, return_index=True)
    reps = G.elements[first]  # least element of each coset, since G.elements is sorted
    k = reps.size
    parent = list(range(k))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for h in H.generators:
        images = np.searchsorted(coset_ids, D.coset_labels[grp.mul(h, reps)])
        for i, j in enumerate(images.tolist()):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    roots = np.array([find(i) for i in range(k)])
    best = np.full(k, grp.order)
    np.minimum.at(best, roots, reps)
    return np.sort(best[np.unique(roots)])


def double_coset_shapes(
    G: SubgroupData,
    H: SubgroupData,
    D: SubgroupData,
    I: SubgroupData,
    total_e: int,
    total_f: int,
    extension: str,
) -> DecompShape:
    """Shape of p in the fixed field of H, relative to the fixed field of G.

    For a double coset H g D the prime below g(P) has
    e = |I| / |gIg^-1 & H| and f = (|D|/|I|) / (|gDg^-1 & H| / |gIg^-1 & H|).
    """
    for sub in (G, H, D, I):
        if not sub.is_closed:
            raise ValidationError("input is not a subgroup")
    if not (I.issubset(D) and D.issubset(G) and H.issubset(G)):
        raise ValidationError("need I <= D <= G and H <= G")
    if I.order != total_e or D.order != total_e * total_f:
        raise ValidationError(f"|I| = {I.order}, |D| = {D.order} inconsistent with e = {total_e}, f = {total_f}")
    grp = G.group
    reps = double_coset_reps(G, H, D)
    r = reps[:, None]
    r_inv = grp.inv(reps)[:, None]
    hit_i = H.mask[grp.mul(grp.mul(r, I.elements[None, :]), r_inv)].sum(axis=1)
    hit_d = H.mask[grp.mul(grp.mul(r, D.elements[None, :]), r_inv)].sum(axis=1)
    entries = []
    for a, b in zip(hit_i.tolist(), hit_d.tolist()):
        e, rem_e = divmod(I.order, a)
        f, rem_f = divmod(total_f * a, b)
        assert rem_e == 0 and rem_f == 0, "index computation must be integral"
        entries.append(PrimeEntry(e, f, 1))
    return DecompShape(extension, G.order // H.order, tuple(entries))


def oracle_decompose(params: CaseParams, extension: str, group: MetacyclicGroup | None = None) -> DecompShape:
    """Shape of p in ``extension`` from double cosets alone.

    Primary case: the prime pi_0 of S is fixed by sigma_mu and unramified over K,
    so D = I = <sigma_mu> (order p-1). Non-primary: S/Q is totally ramified at p,
    so D = I = G.
    """
    if extension not in ORACLE_EXTENSIONS:
        raise ValidationError(f"oracle does not handle extension {extension!r}")
    grp = group or MetacyclicGroup(params.p, conjugation_multiplier(params))
    G = grp.whole
    sig = grp.sigma_group
    D = I = sig if params.primary else G
    if extension == "S/K":
        ambient = grp.theta_group
        D = grp.intersect(D, ambient)
        I = D if I is D else grp.intersect(I, ambient)
        return double_coset_shapes(ambient, grp.trivial, D, I, I.order, D.order // I.order, extension)
    H = {"M/Q": sig, "K/Q": grp.theta_group, "S/Q": grp.trivial}[extension]
    return double_coset_shapes(G, H, D, I, I.order, D.order // I.order, extension)


def check_orbit_structure(p: int, w: int) -> list[str]:
    """Problems with the sigma_mu orbit structure on the primes above pi (empty if none)."""
    problems = []
    d = mult_order(p, w)
    orbits = sigma_orbits_on_primes(p, w)
    fixed = [o for o in orbits if len(o) == 1]
    if fixed != [(0,)]:
        problems.append(f"expected the single fixed point 0, got {fixed}")
    if d <= 1:
        problems.append(f"d = {d} is not > 1")
    if any(len(o) != d for o in orbits if o != (0,)):
        problems.append("non-fixed orbits are not all of size d")
    for o in orbits:
        for i in o:
            if i * pow(w, d, p) % p != i:
                problems.append(f"sigma_mu^d moves {i}")
    if len(orbits) != (p - 1) // d + 1:
        problems.append("orbit count is not (p-1)/d + 1")
    return problems


def verify_params(p: int, n: int, v: int | None = None) -> list[dict]:
    """Compare closed forms against the oracle for one (p, n), both cases."""
    if v is None:
        v = smallest_primitive_root(p)
    diffs = []
    base = CaseParams(p, v, n)
    grp = MetacyclicGroup(p, conjugation_multiplier(base))
    for problem in check_orbit_structure(p, grp.w):
        diffs.append({"p": p, "v": v, "n": n, "check": "orbit_structure", "detail": problem})
    for primary in (True, False):
        params = CaseParams(p, v, n, primary)
        for ext in ORACLE_EXTENSIONS:
            closed = decompose(params, ext)
            found = oracle_decompose(params, ext, grp)
            if closed != found:
                diffs.append(
                    {
                        "p": p,
                        "v": v,
                        "n": n,
                        "case": "primary" if primary else "non-primary",
                        "extension": ext,
                        "closed_form": closed.to_dict(),
                        "oracle": found.to_dict(),
                    }
                )
    return diffs


def _verify_prime(p: int) -> list[dict]:
    diffs = []
    for n in range(2, p - 1):
        diffs.extend(verify_params(p, n))
    return diffs


def verify_sweep(max_p: int, min_p: int = 5, jobs: int = 1) -> list[dict]:
    """Every prime min_p <= p <= max_p and every n in [2, p-2]; returns mismatch records."""
    primes = primes_between(max(min_p, 5), max_p)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_verify_prime, primes))
    else:
        chunks = [_verify_prime(p) for p in primes]
    return [d for chunk in chunks for d in chunk]
