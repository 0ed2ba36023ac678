"""Permutation groups on 0-based points with a deterministic stabilizer chain.

Permutations are stored as image tuples, so g maps i to g.images[i].  Products
compose left to right: (g * h) applies g first.  The Schreier-Sims chain always
picks the smallest moved point as the next base point (after any caller-supplied
hint), which makes orders, transversals and element enumeration reproducible.
"""

from __future__ import annotations


class InvalidPermutation(ValueError):
    pass


class NotInvariant(ValueError):
    pass


class Perm:
    """A permutation of {0, ..., n-1} as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles, one_based: bool = False) -> Perm:
        images = list(range(n))
        off = 1 if one_based else 0
        for cyc in cycles:
            pts = [c - off for c in cyc]
            for pt in pts:
                if not 0 <= pt < n:
                    raise InvalidPermutation(f"point {pt + off} out of range")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Perm) -> Perm:
        if other.degree != self.degree:
            raise InvalidPermutation("degree mismatch in product")
        oth = other.images
        return Perm(oth[i] for i in self.images)

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, n: int) -> Perm:
        if n < 0:
            return self.inverse() ** (-n)
        r = Perm.identity(self.degree)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_string(self, one_based: bool = True) -> str:
        off = 1 if one_based else 0
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join(
            "(" + " ".join(str(c + off) for c in cyc) + ")" for cyc in cycs
        )

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.images}"


def parse_cycle_string(s: str, n: int, one_based: bool = True) -> Perm:
    """Parse cycle notation like "(1 3)(2 5 4)" into a permutation."""
    s = s.strip()
    if s in ("()", "e", ""):
        return Perm.identity(n)
    if s.count("(") != s.count(")") or not s.startswith("("):
        raise InvalidPermutation(f"bad cycle string: {s!r}")
    cycles = []
    for chunk in s.replace(")", ")|").split("|"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise InvalidPermutation(f"bad cycle string: {s!r}")
        body = chunk[1:-1].replace(",", " ").split()
        try:
            cycles.append([int(tok) for tok in body])
        except ValueError as exc:
            raise InvalidPermutation(f"bad cycle string: {s!r}") from exc
    return Perm.from_cycles(n, cycles, one_based=one_based)


class PermGroup:
    """A permutation group presented by a base and strong generating set."""

    def __init__(self, degree, generators, strong_generators, base, transversals):
        self.degree = degree
        self.generators = tuple(generators)
        self.strong_generators = tuple(strong_generators)
        self.base = tuple(base)
        self._transversals = transversals

    def order(self) -> int:
        n = 1
        for t in self._transversals:
            n *= len(t)
        return n

    def strip(self, g: Perm, start: int = 0):
        """Sift g through the chain, returning (residue, stop level)."""
        for i in range(start, len(self.base)):
            b = g.images[self.base[i]]
            t = self._transversals[i]
            if b not in t:
                return g, i
            g = g * t[b].inverse()
        return g, len(self.base)

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = self.strip(g)
        return residue.is_identity()

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        for b in queue:
            for g in self.generators:
                c = g.images[b]
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        left = set(range(self.degree))
        out = []
        while left:
            orb = self.orbit(min(left))
            out.append(orb)
            left -= set(orb)
        return out

    def elements(self, limit: int | None = None):
        """All group elements, in chain order.  Guarded by an optional cap."""
        if limit is not None and self.order() > limit:
            raise ValueError(f"group order {self.order()} exceeds cap {limit}")

        def walk(level):
            if level == len(self.base):
                yield Perm.identity(self.degree)
                return
            for u in self._transversals[level].values():
                for h in walk(level + 1):
                    yield h * u

        return list(walk(0))

    def stabilizer(self, point: int) -> PermGroup:
        chain = bsgs_build(self.degree, self.generators, base_hint=(point,))
        sub = [g for g in chain.strong_generators if g.images[point] == point]
        return bsgs_build(self.degree, sub)

    def restrict(self, points) -> PermGroup:
        """The image of the action on an invariant list of points."""
        points = list(points)
        pos = {p: i for i, p in enumerate(points)}
        rgens = []
        for g in self.generators:
            if any(g.images[p] not in pos for p in points):
                raise NotInvariant(f"{g} does not preserve {points}")
            rgens.append(Perm(pos[g.images[p]] for p in points))
        return bsgs_build(len(points), rgens)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()})"


def bsgs_build(degree: int, generators, base_hint=()) -> PermGroup:
    """Deterministic Schreier-Sims construction of a stabilizer chain."""
    input_gens = []
    for g in generators:
        if not isinstance(g, Perm):
            g = Perm(g)
        if g.degree != degree:
            raise InvalidPermutation(f"degree {g.degree}, expected {degree}")
        if not g.is_identity() and g not in input_gens:
            input_gens.append(g)

    ident = Perm.identity(degree)
    base: list[int] = []
    strong: list[Perm] = []
    transversals: list[dict[int, Perm]] = []

    for pt in base_hint:
        if pt not in base:
            base.append(pt)
            transversals.append({pt: ident})

    def level_gens(i):
        prefix = base[:i]
        return [
            s for s in strong if all(s.images[b] == b for b in prefix)
        ]

    def rebuild_transversal(i):
        gens_i = level_gens(i)
        t = {base[i]: ident}
        queue = [base[i]]
        for b in queue:
            for s in gens_i:
                c = s.images[b]
                if c not in t:
                    t[c] = t[b] * s
                    queue.append(c)
        transversals[i] = t

    def strip(g, start=0):
        for i in range(start, len(base)):
            b = g.images[base[i]]
            if b not in transversals[i]:
                return g, i
            g = g * transversals[i][b].inverse()
        return g, len(base)

    def insert(h, j):
        # h fixes base[:j]; it becomes a strong generator on levels 0..j
        if j == len(base):
            base.append(min(p for p in range(degree) if h.images[p] != p))
            transversals.append({base[-1]: ident})
        strong.append(h)
        for k in range(j + 1):
            rebuild_transversal(k)

    for g in input_gens:
        h, j = strip(g)
        if not h.is_identity():
            insert(h, j)

    # verify Schreier generators bottom-up, inserting residues as found
    i = len(base) - 1
    while i >= 0:
        modified = False
        gens_i = level_gens(i)
        for b in list(transversals[i].keys()):
            u = transversals[i][b]
            for s in gens_i:
                sg = u * s * transversals[i][s.images[b]].inverse()
                if sg.is_identity():
                    continue
                h, j = strip(sg, i + 1)
                if not h.is_identity():
                    insert(h, j)
                    i = j
                    modified = True
                    break
            if modified:
                break
        if not modified:
            i -= 1

    return PermGroup(degree, input_gens, strong, base, transversals)


def closure_elements(degree: int, generators, cap: int = 10**6) -> list[Perm]:
    """Brute-force closure, for cross-checks on small groups."""
    gens = [g if isinstance(g, Perm) else Perm(g) for g in generators]
    seen = {Perm.identity(degree)}
    queue = list(seen)
    for g in queue:
        for s in gens:
            h = g * s
            if h not in seen:
                if len(seen) >= cap:
                    raise ValueError("closure exceeded cap")
                seen.add(h)
                queue.append(h)
    return sorted(seen, key=lambda p: p.images)
