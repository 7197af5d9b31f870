"""Irreducible characters of symmetric groups.

Characters are computed by the Murnaghan-Nakayama recursion, implemented on
first-column hook lengths (beta numbers): removing a border strip of length
m is subtracting m from one beta number while keeping them distinct, with
the sign given by the number of beta numbers jumped over.  Dimensions use
the hook length formula as a fast path once only fixed points remain.

Cycle types passed around internally drop their trailing 1-parts ("core"
form), which keeps cache keys small during large Burnside sweeps.
"""

from __future__ import annotations

import os
import threading
from fractions import Fraction
from math import factorial
from pathlib import Path

from . import config
from .errors import DomainError
from .partitions import IntPartition

CACHE_FORMAT_VERSION = 1
_CACHE_HEADER = "stratavol-characters"


class CharTableCache:
    """In-memory character values keyed by (irrep label, cycle-type core),
    with optional one-file-per-degree persistence.

    Values are deterministic, so concurrent duplicate inserts are harmless;
    a lock guards only file input/output.
    """

    def __init__(self) -> None:
        self.values: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        self._io_lock = threading.Lock()
        self._loaded_degrees: set[tuple[int, str]] = set()

    def get(self, key):
        return self.values.get(key)

    def put(self, key, value: int) -> None:
        self.values[key] = value

    def __len__(self) -> int:
        return len(self.values)

    # -- persistence ------------------------------------------------------

    def _path_for_degree(self, d: int, directory: Path) -> Path:
        return directory / f"chars-d{d:03d}.txt"

    def save_degree(self, d: int, directory: Path | None = None) -> Path:
        """Write all cached values for irreps of size d to a text file."""
        directory = directory or config.default_cache_dir()
        directory.mkdir(parents=True, exist_ok=True)
        path = self._path_for_degree(d, directory)
        rows = sorted(
            (lam, core, v)
            for (lam, core), v in self.values.items()
            if sum(lam) == d
        )
        tmp = path.with_suffix(".tmp")
        with self._io_lock:
            with open(tmp, "w", encoding="ascii") as fh:
                fh.write(f"{_CACHE_HEADER} v{CACHE_FORMAT_VERSION} d={d}\n")
                for lam, core, v in rows:
                    fh.write(
                        ",".join(map(str, lam))
                        + ";"
                        + ",".join(map(str, core))
                        + ";"
                        + str(v)
                        + "\n"
                    )
            os.replace(tmp, path)
        return path

    def load_degree(self, d: int, directory: Path | None = None) -> int:
        """Load persisted values for degree d.  Corrupt or version-mismatched
        files are ignored (and will be rebuilt on the next save)."""
        directory = directory or config.default_cache_dir()
        marker = (d, str(directory))
        if marker in self._loaded_degrees:
            return 0
        self._loaded_degrees.add(marker)
        path = self._path_for_degree(d, directory)
        if not path.is_file():
            return 0
        loaded = 0
        try:
            with self._io_lock, open(path, encoding="ascii") as fh:
                header = fh.readline().strip()
                if header != f"{_CACHE_HEADER} v{CACHE_FORMAT_VERSION} d={d}":
                    return 0
                for line in fh:
                    lam_s, core_s, val_s = line.strip().split(";")
                    lam = tuple(int(x) for x in lam_s.split(",") if x)
                    core = tuple(int(x) for x in core_s.split(",") if x)
                    self.values[(lam, core)] = int(val_s)
                    loaded += 1
        except (OSError, ValueError):
            return 0
        return loaded


_cache = CharTableCache()
_dim_cache: dict[tuple[int, ...], int] = {}


def character_cache() -> CharTableCache:
    """The process-wide character cache."""
    return _cache


def clear_caches() -> None:
    _cache.values.clear()
    _cache._loaded_degrees.clear()
    _dim_cache.clear()


def dimension(lam: IntPartition | tuple[int, ...]) -> int:
    """Dimension of the irreducible representation labeled by lam, by the
    hook length formula."""
    lam = tuple(lam)
    cached = _dim_cache.get(lam)
    if cached is not None:
        return cached
    d = sum(lam)
    if d == 0:
        return 1
    ncols = lam[0]
    col_heights = [0] * ncols
    for li in lam:
        for j in range(li):
            col_heights[j] += 1
    hooks = 1
    for i, li in enumerate(lam):
        for j in range(li):
            hooks *= li - j + col_heights[j] - i - 1
    value = factorial(d) // hooks
    _dim_cache[lam] = value
    return value


def _char_core(lam: tuple[int, ...], core: tuple[int, ...]) -> int:
    """Character of lam on the cycle type (core parts, then all 1s)."""
    if not core:
        return dimension(lam)
    key = (lam, core)
    cached = _cache.get(key)
    if cached is not None:
        return cached
    m = core[0]
    rest = core[1:]
    k = len(lam)
    beta = [lam[i] + k - 1 - i for i in range(k)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - m
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        nbeta = sorted((x for x in beta if x != b), reverse=True)
        nbeta.append(nb)
        nbeta.sort(reverse=True)
        kk = len(nbeta)
        nlam = tuple(
            p for p in (nbeta[i] - (kk - 1 - i) for i in range(kk)) if p > 0
        )
        sub = _char_core(nlam, rest)
        total += sub if height % 2 == 0 else -sub
    _cache.put(key, total)
    return total


def character(lam, rho) -> int:
    """Exact integer character value of the irrep lam on cycle type rho."""
    lam = IntPartition(lam)
    rho = IntPartition(rho)
    if lam.size != rho.size:
        raise DomainError(f"size mismatch: |lam|={lam.size} but |rho|={rho.size}")
    core = tuple(p for p in rho if p >= 2)
    return _char_core(tuple(lam), core)


def m_cycle_class_size(d: int, m: int) -> int:
    """Number of permutations of d points with one m-cycle and d-m fixed
    points: d!/((d-m)! m).  Zero when the class is empty (m > d)."""
    if m < 2:
        raise DomainError(f"cycle length must be >= 2, got {m}")
    if d < 1:
        raise DomainError(f"degree must be >= 1, got {d}")
    if m > d:
        return 0
    return factorial(d) // (factorial(d - m) * m)


def conjugacy_class_size(rho) -> int:
    """Size of the conjugacy class with cycle type rho: d!/prod(k^c_k c_k!)."""
    rho = IntPartition(rho)
    z = 1
    for part, count in rho.multiplicities().items():
        z *= part**count * factorial(count)
    return factorial(rho.size) // z


def central_char_f(m: int, lam) -> Fraction:
    """Scalar by which the class sum of an m-cycle class acts on the irrep
    lam: (class size) * character / dimension.  Zero when m exceeds |lam|."""
    if m < 2:
        raise DomainError(f"cycle length must be >= 2, got {m}")
    lam = IntPartition(lam)
    d = lam.size
    if m > d:
        return Fraction(0)
    size = factorial(d) // (factorial(d - m) * m)
    chi = _char_core(tuple(lam), (m,))
    if chi == 0:
        return Fraction(0)
    return Fraction(size * chi, dimension(lam))
