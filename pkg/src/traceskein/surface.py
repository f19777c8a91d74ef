"""Punctured surfaces, free-group words and conjugacy classes of loops.

A surface with at least one puncture deformation retracts onto a graph with a
single vertex, so its fundamental group is free.  We record the surface as a
one-vertex fat graph: each generator is a loop edge and the 2*rank half-edges
at the vertex carry a cyclic order.  That order is all the orientation data we
ever need (boundary words, crossing signs, linking at infinity).

Letters are nonzero ints: generator ``k`` (0-based) is ``k + 1`` and its
inverse is ``-(k + 1)``.  Words are plain tuples of letters.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Word = tuple


class AlphabetError(ValueError):
    """A word uses a letter outside the surface's alphabet."""


class SurfaceError(ValueError):
    """Inconsistent surface data (bad cyclic order, failed Euler check...)."""


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Sequence[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def is_trivial(w: Sequence[int]) -> bool:
    return not free_reduce(w)


def rotations(w: Word) -> Iterable[Word]:
    for i in range(len(w)):
        yield w[i:] + w[:i]


def _letter_key(x: int) -> int:
    # a < a^-1 < b < b^-1 < ...
    return 2 * (abs(x) - 1) + (x < 0)


def _least_rotation(w: Word) -> tuple:
    return min(tuple(_letter_key(x) for x in r) for r in rotations(w))


def _from_keys(keys: tuple) -> Word:
    return tuple((k // 2 + 1) * (-1 if k % 2 else 1) for k in keys)


@dataclass(frozen=True, order=True)
class ConjClass:
    """Free homotopy class of an unoriented loop.

    ``word`` is the canonical representative: cyclically reduced and
    lexicographically least among the rotations of itself and its inverse.
    Build instances with :func:`canonical_class`; the constructor does not
    canonicalize.
    """

    word: Word

    def __hash__(self):
        # classes are dictionary keys everywhere; hash the word once
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = hash(self.word)
            object.__setattr__(self, "_hash", h)
            return h

    def __len__(self):
        return len(self.word)

    @cached_property
    def root(self) -> tuple[Word, int]:
        """Primitive root of the canonical word and the exponent."""
        return primitive_root(self.word)


class _Trivial:
    """Marker for the class of the identity (a contractible loop)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TRIVIAL"

    def __reduce__(self):
        return (_Trivial, ())


TRIVIAL = _Trivial()


def canonical_class(w: Sequence[int]):
    """Canonical ConjClass of ``w`` up to conjugation and inversion.

    Returns :data:`TRIVIAL` when ``w`` is trivial in the free group.
    """
    return _canonical(tuple(w))


@lru_cache(maxsize=500_000)
def _canonical(w: Word):
    c = cyclic_reduce(w)
    if not c:
        return TRIVIAL
    best = min(_least_rotation(c), _least_rotation(inverse(c)))
    return ConjClass(_from_keys(best))


def primitive_root(w: Word) -> tuple[Word, int]:
    """Split a cyclically reduced word as ``root ** k`` with ``root`` primitive."""
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[p:] + w[:p] == w:
            return w[:p], n // p
    return w, 1


def parse_word(generators: Sequence[str], text: str) -> Word:
    """Tokenize ``text`` over generator names.

    Inverses are written with a leading capital (``A``, ``X1``) or a trailing
    apostrophe (``a'``); tokens may be run together (``abAB``).
    """
    out: list[int] = []
    names = sorted(generators, key=len, reverse=True)
    index = {g: i + 1 for i, g in enumerate(generators)}
    for chunk in text.split():
        pos = 0
        while pos < len(chunk):
            for g in names:
                piece = chunk[pos:pos + len(g)]
                if piece == g:
                    letter = index[g]
                    break
                if piece != g and piece.lower() == g.lower() and piece[0].isupper():
                    letter = -index[g]
                    break
            else:
                raise AlphabetError(
                    f"cannot parse {chunk!r} at position {pos} over "
                    f"generators {list(generators)}")
            pos += len(g)
            while pos < len(chunk) and chunk[pos] == "'":
                letter = -letter
                pos += 1
            out.append(letter)
    return tuple(out)


@dataclass(frozen=True)
class Surface:
    """Orientable surface of finite type with at least one puncture.

    ``fatgraph_order`` lists the 2*rank half-edges at the single vertex in
    counterclockwise order.  The half-edge labelled ``x`` is the one we leave
    through when reading the letter ``x``.
    """

    name: str
    genus: int
    punctures: int
    generators: tuple
    fatgraph_order: tuple
    curves: tuple = field(default=(), compare=False)

    def __post_init__(self):
        rank = len(self.generators)
        if rank < 2:
            raise SurfaceError("rank must be at least 2")
        if self.punctures < 1:
            raise SurfaceError("surface needs at least one puncture")
        if len(set(self.generators)) != rank:
            raise SurfaceError("duplicate generator names")
        letters = set(range(1, rank + 1)) | set(range(-rank, 0))
        if len(self.fatgraph_order) != 2 * rank or set(self.fatgraph_order) != letters:
            raise SurfaceError("fatgraph_order must list every letter and inverse once")
        if 2 - 2 * self.genus - self.punctures != 1 - rank:
            raise SurfaceError(
                f"rank {rank} does not match genus {self.genus} with "
                f"{self.punctures} punctures")
        faces = self.boundary_words
        if len(faces) != self.punctures:
            raise SurfaceError(
                f"fat graph has {len(faces)} boundary cycles, expected "
                f"{self.punctures}")

    @property
    def rank(self) -> int:
        return len(self.generators)

    @cached_property
    def position(self) -> dict:
        return {x: i for i, x in enumerate(self.fatgraph_order)}

    @cached_property
    def boundary_words(self) -> tuple:
        """Words read around each boundary cycle of the fat graph."""
        n = len(self.fatgraph_order)
        succ = {self.fatgraph_order[i]: self.fatgraph_order[(i + 1) % n]
                for i in range(n)}
        seen: set[int] = set()
        faces = []
        for start in self.fatgraph_order:
            if start in seen:
                continue
            face = []
            h = start
            while h not in seen:
                seen.add(h)
                face.append(h)
                h = succ[-h]
            faces.append(tuple(face))
        return tuple(faces)

    def euler_characteristic(self) -> int:
        return 1 - self.rank

    def ccw(self, x: int, y: int, z: int) -> int:
        """Orientation of three distinct half-edges in the cyclic order."""
        n = 2 * self.rank
        p = self.position
        dy = (p[y] - p[x]) % n
        dz = (p[z] - p[x]) % n
        return 1 if dy < dz else -1

    def check_letters(self, w: Iterable[int]) -> None:
        r = self.rank
        for x in w:
            if not isinstance(x, int) or x == 0 or abs(x) > r:
                raise AlphabetError(f"letter {x!r} not in alphabet of {self.name}")

    # -- text <-> words -------------------------------------------------

    def parse(self, text: str) -> Word:
        """Parse a word such as ``"a b A b"``, ``"abAb"`` or ``"x1 x2'"``."""
        return parse_word(self.generators, text)

    def format(self, w: Sequence[int], ascii: bool = False) -> str:
        if not w:
            return "1"
        parts = []
        for x in w:
            g = self.generators[abs(x) - 1]
            if x > 0:
                parts.append(g)
            elif ascii:
                parts.append(g[0].upper() + g[1:])
            else:
                parts.append(g + "⁻¹")
        sep = "" if all(len(g) == 1 for g in self.generators) else " "
        if ascii:
            sep = " "
        return sep.join(parts)

    def curve(self, name: str) -> Word:
        """Word of a named curve shipped with the surface."""
        for key, word in self.curves:
            if key == name:
                return word
        raise KeyError(f"{self.name} has no curve named {name!r}")

    def random_word(self, length: int, rng: random.Random) -> Word:
        """Uniform random reduced word of the given length."""
        r = self.rank
        w: list[int] = []
        while len(w) < length:
            x = rng.choice([i for i in range(-r, r + 1) if i])
            if w and w[-1] == -x:
                continue
            w.append(x)
        return tuple(w)

    def random_class(self, max_length: int, rng: random.Random,
                     min_length: int = 1) -> ConjClass:
        while True:
            c = canonical_class(self.random_word(rng.randint(min_length, max_length), rng))
            if c is not TRIVIAL:
                return c

    def classes_up_to(self, max_length: int) -> list:
        """All nontrivial classes with canonical length at most ``max_length``."""
        r = self.rank
        letters = [i for i in range(-r, r + 1) if i]
        found = set()
        frontier: list[tuple] = [(x,) for x in letters]
        for _ in range(max_length):
            nxt = []
            for w in frontier:
                if w[0] != -w[-1]:
                    found.add(canonical_class(w))
                if len(w) < max_length:
                    nxt.extend(w + (x,) for x in letters if x != -w[-1])
            frontier = nxt
        return sorted(found)


# -- text format for surfaces ------------------------------------------------

_KEYS = {"name", "genus", "punctures", "generators", "order", "curve"}


def parse_surface(text: str) -> Surface:
    """Read a surface from the declarative text format.

    ::

        name: t1p
        genus: 1
        punctures: 1
        generators: a b
        order: a b A B
        curve alpha: a b     # optional named curves

    ``boundary`` lines are accepted and checked against the fat graph.
    """
    data: dict = {}
    curves = []
    boundaries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise SurfaceError(f"line {lineno}: expected 'key: value'")
        key, value = (s.strip() for s in line.split(":", 1))
        if key.startswith("curve "):
            curves.append((key[6:].strip(), value))
        elif key == "boundary":
            boundaries.append(value)
        elif key in _KEYS:
            data[key] = value
        else:
            raise SurfaceError(f"line {lineno}: unknown key {key!r}")
    try:
        gens = tuple(data["generators"].split())
        genus = int(data["genus"])
        punctures = int(data["punctures"])
    except KeyError as exc:
        raise SurfaceError(f"missing field {exc.args[0]!r}") from None
    order = parse_word(gens, data.get("order", ""))
    surf = Surface(data.get("name", "custom"), genus, punctures, gens, order)
    named = tuple((k, surf.parse(v)) for k, v in curves)
    surf = Surface(surf.name, genus, punctures, gens, order, named)
    if boundaries:
        have = {canonical_class(b) for b in surf.boundary_words}
        for b in boundaries:
            if canonical_class(surf.parse(b)) not in have:
                raise SurfaceError(f"boundary word {b!r} is not a boundary cycle")
    return surf


def format_surface(s: Surface) -> str:
    lines = [f"name: {s.name}", f"genus: {s.genus}", f"punctures: {s.punctures}",
             "generators: " + " ".join(s.generators),
             "order: " + s.format(s.fatgraph_order, ascii=True)]
    lines += ["boundary: " + s.format(b, ascii=True) for b in s.boundary_words]
    lines += [f"curve {k}: " + s.format(w, ascii=True) for k, w in s.curves]
    return "\n".join(lines) + "\n"


# -- presets ----------------------------------------------------------------

def punctured_torus() -> Surface:
    return Surface("t1p", 1, 1, ("a", "b"), (1, 2, -1, -2))


def punctured_sphere(n: int) -> Surface:
    """Sphere with ``n >= 3`` punctures; generators loop around n-1 of them."""
    if n < 3:
        raise SurfaceError("need at least three punctures")
    gens = tuple(f"x{i}" for i in range(1, n))
    order = tuple(x for i in range(1, n) for x in (i, -i))
    return Surface(f"s{n}p", 0, n, gens, order)


def four_punctured_sphere() -> Surface:
    s = punctured_sphere(4)
    named = (
        ("alpha", (1, 2)),
        ("beta", (2, 3)),
        ("c1", (1,)),
        ("c2", (2,)),
        ("c3", (3,)),
        ("c4", (1, 2, 3)),
        ("gamma", (1, 3)),
        ("delta", (1, 2, 3, -2)),
    )
    return Surface(s.name, s.genus, s.punctures, s.generators, s.fatgraph_order, named)


PRESETS = {
    "t1p": punctured_torus,
    "s4p": four_punctured_sphere,
}


def get_surface(spec: str) -> Surface:
    """Preset name (``t1p``, ``s4p``, ``sNp``) or path to a surface file."""
    if spec in PRESETS:
        return PRESETS[spec]()
    m = re.fullmatch(r"s(\d+)p", spec)
    if m:
        return punctured_sphere(int(m.group(1)))
    try:
        with open(spec, encoding="utf-8") as fh:
            return parse_surface(fh.read())
    except FileNotFoundError:
        raise SurfaceError(f"unknown surface {spec!r}") from None
