"""Code search: greedy construction, exact maximum codes and list profiles."""

from __future__ import annotations

import math
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np

from ringcode.core.config import RingcodeConfig, get_config
from ringcode.core.errors import EnumerationCapExceeded, InvalidCodeError, ParameterError
from ringcode.core.geometry import (
    Code,
    ball_volume_bruteforce,
    ball_volume_overweight,
    enumerate_words,
    min_distance,
    word_rank,
)
from ringcode.core.models import RationalModel, SearchSidecar
from ringcode.core.ring import FiniteRing, Word
from ringcode.core.weights import WeightFunction, overweight
from ringcode.utils.helpers import chunk_ranges, format_rational, ordered_map, parse_rational

ORDERINGS = ("lex", "weight", "random")


@dataclass
class SearchResult:
    """Outcome of a code search."""

    code: Code
    weight: WeightFunction
    d: Fraction
    method: str  # greedy, branch-and-bound
    certified_optimal: bool
    nodes: int
    ordering: str
    gv_guarantee: Fraction | None = None
    lower_bound: int | None = None
    wall_time: float = 0.0

    @property
    def max_size_found(self) -> int:
        return self.code.size

    def sidecar(self, timing: bool = False) -> SearchSidecar:
        return SearchSidecar(
            ring=self.code.ring.name,
            n=self.code.n,
            d=format_rational(self.d),
            weight=self.weight.name,
            method=self.method,
            size=self.code.size,
            certified_optimal=self.certified_optimal,
            nodes=self.nodes,
            ordering=self.ordering,
            gv_guarantee=RationalModel.of(self.gv_guarantee) if self.gv_guarantee is not None else None,
            wall_time=round(self.wall_time, 6) if timing else None,
        )

    def to_dict(self, timing: bool = False) -> dict:
        document = self.sidecar(timing).model_dump(exclude_none=True)
        document["words"] = [list(word) for word in self.code.words]
        return document


@dataclass(frozen=True)
class ListProfile:
    """Largest number of codewords in one ball of the given radius."""

    radius: Fraction
    max_list_size: int
    center: Word
    centers_scanned: int

    def to_dict(self) -> dict:
        return {
            "radius": format_rational(self.radius),
            "max_list_size": self.max_list_size,
            "center": list(self.center),
            "centers_scanned": self.centers_scanned,
        }


class _BudgetExhausted(Exception):
    pass


@dataclass
class _Subtree:
    """Result of searching the cliques whose lowest vertex is fixed."""

    completed: bool
    nodes: int
    clique: list[int] = field(default_factory=list)


def gv_guarantee(w: WeightFunction, n: int, d: Fraction | int | str, cap: int | None = None) -> Fraction:
    """|R|^n / |{x : w(x) < d}|, closed form for the overweight."""
    d = parse_rational(d)
    total = w.ring.order**n
    if d <= 0:
        return Fraction(total)
    if w.name == "overweight":
        return Fraction(total, ball_volume_overweight(w.ring, n, math.ceil(d) - 1))
    strict = Fraction(w.at_least(d) - 1, w.scale)
    return Fraction(total, ball_volume_bruteforce(w, n, strict, cap=cap))


class CodeSearcher:
    """Searches R^n for codes of minimum distance at least d under a weight.

    Two words are compatible when their distance is at least d in both
    directions; codes are cliques of the compatibility relation.
    """

    def __init__(
        self,
        weight: WeightFunction,
        n: int,
        d: Fraction | int | str,
        config: RingcodeConfig | None = None,
        budget: int | None = None,
        workers: int | None = None,
        cap: int | None = None,
        progress_callback: Callable[[str], None] | None = None,
    ):
        self.config = config or get_config()
        self.weight = weight
        self.ring = weight.ring
        self.n = n
        self.d = parse_rational(d)
        self.budget = self.config.search.node_budget if budget is None else budget
        self.workers = self.config.search.workers if workers is None else workers
        self.cap = self.config.enumeration.cap if cap is None else cap
        self.progress_callback = progress_callback

        if n < 1:
            raise ParameterError("code length n must be at least 1")
        if self.d < 0:
            raise ParameterError("minimum distance d must be nonnegative")
        if weight.name == "overweight" and self.d > 2 * n:
            raise ParameterError(f"d={format_rational(self.d)} outside [0, {2 * n}] for the overweight")

        self.threshold = weight.at_least(self.d)
        self.words = enumerate_words(self.ring, n, cap=self.cap)
        self.word_weights = weight.scaled[self.words].sum(axis=1)

    def _log(self, message: str) -> None:
        if self.progress_callback:
            self.progress_callback(message)

    # --- compatibility ---

    def _distances_from(self, word: Word, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Scaled w(y - word) and w(word - y) for every row y."""
        sub, scaled = self.ring.sub, self.weight.scaled
        forward = np.zeros(len(rows), dtype=np.int64)
        backward = np.zeros(len(rows), dtype=np.int64)
        for i, x in enumerate(word):
            forward += scaled[sub[rows[:, i], x]]
            backward += scaled[sub[x, rows[:, i]]]
        return forward, backward

    def compatible_with(self, word: Word, rows: np.ndarray) -> np.ndarray:
        forward, backward = self._distances_from(word, rows)
        return (forward >= self.threshold) & (backward >= self.threshold)

    def _check_seed(self, seed_words: Sequence[Word]) -> list[Word]:
        seeds = sorted({tuple(int(x) for x in word) for word in seed_words})
        for word in seeds:
            if len(word) != self.n or any(not 0 <= x < self.ring.order for x in word):
                raise InvalidCodeError(f"seed word {word} is not a word of {self.ring.name}^{self.n}")
        if len(seeds) > 1:
            seed_code = Code.from_words(self.ring, seeds, n=self.n)
            for i, word in enumerate(seeds):
                others = np.array([w for j, w in enumerate(seeds) if j != i], dtype=np.int64)
                if not self.compatible_with(word, others).all():
                    raise InvalidCodeError(
                        f"seed words have minimum distance {min_distance(seed_code, self.weight)}, "
                        f"below {format_rational(self.d)}"
                    )
        return seeds

    # --- greedy ---

    def greedy(self, ordering: str = "lex", seed: int = 0, seed_words: Sequence[Word] = ()) -> SearchResult:
        """Add every word compatible with all words chosen so far, in the given order."""
        if ordering not in ORDERINGS:
            raise ParameterError(f"unknown ordering {ordering!r}; expected one of {', '.join(ORDERINGS)}")
        started = time.perf_counter()
        total = len(self.words)

        if ordering == "lex":
            order = np.arange(total)
        elif ordering == "weight":
            order = np.lexsort((np.arange(total), self.word_weights))
        else:
            order = np.random.default_rng(seed).permutation(total)

        blocked = np.zeros(total, dtype=bool)
        chosen: list[Word] = []

        def take(word: Word) -> None:
            chosen.append(word)
            blocked[word_rank(self.ring, word)] = True
            blocked[~self.compatible_with(word, self.words)] = True

        for word in self._check_seed(seed_words):
            take(word)
        for index in order:
            if not blocked[index]:
                take(tuple(int(x) for x in self.words[index]))
        self._log(f"greedy ({ordering}): {len(chosen)} words")

        code = Code.from_words(self.ring, chosen, n=self.n)
        self._assert_distance(code)
        guarantee = gv_guarantee(self.weight, self.n, self.d, cap=self.cap)
        if self.weight.is_symmetric and code.size < guarantee:
            raise AssertionError(f"greedy code of size {code.size} below the GV guarantee {guarantee}")

        label = f"random({seed})" if ordering == "random" else ordering
        return SearchResult(
            code=code,
            weight=self.weight,
            d=self.d,
            method="greedy",
            certified_optimal=False,
            nodes=0,
            ordering=label,
            gv_guarantee=guarantee,
            wall_time=time.perf_counter() - started,
        )

    # --- branch and bound ---

    def maximum(
        self,
        fix_zero: bool = True,
        seed_words: Sequence[Word] = (),
        max_vertices: int | None = None,
    ) -> SearchResult:
        """Largest code containing the fixed words, by branch and bound.

        Translation invariance lets the zero word be fixed. With seed
        words, the search extends them instead.
        """
        started = time.perf_counter()
        max_vertices = self.config.search.max_vertices if max_vertices is None else max_vertices

        fixed = self._check_seed(seed_words)
        if not fixed and fix_zero:
            fixed = [(self.ring.zero,) * self.n]

        mask = np.ones(len(self.words), dtype=bool)
        for word in fixed:
            mask[word_rank(self.ring, word)] = False
            mask &= self.compatible_with(word, self.words)
        candidates = np.flatnonzero(mask)
        # vertices ordered by weight, then lexicographically
        candidates = candidates[np.lexsort((candidates, self.word_weights[candidates]))]
        if len(candidates) > max_vertices:
            raise EnumerationCapExceeded(
                f"{len(candidates)} candidate words, above the search cap {max_vertices}"
            )

        vertices = [tuple(int(x) for x in self.words[i]) for i in candidates]
        ranks = [int(i) for i in candidates]
        adjacency = self._adjacency(vertices)
        self._log(f"branch and bound over {len(vertices)} candidates, {len(fixed)} fixed")

        incumbent = self._greedy_clique(adjacency)
        lower = len(incumbent)
        roots = list(range(len(vertices)))

        def search_root(root: int, budget: int) -> _Subtree:
            return self._search_subtree(adjacency, ranks, root, lower, budget)

        # Roots draw on one budget in root order. Threaded runs search every
        # root against the full budget and replay any root that overruns its
        # share, so both paths see the same truncated subtree.
        threaded: list[_Subtree] | None = None
        if self.workers > 1:
            threaded = ordered_map(lambda root: search_root(root, self.budget), roots, self.workers)

        best = incumbent
        nodes = 0
        certified = True
        for root in roots:
            remaining = self.budget - nodes
            subtree = threaded[root] if threaded is not None else search_root(root, remaining)
            if subtree.nodes > remaining:
                subtree = search_root(root, remaining)
            nodes += subtree.nodes
            if subtree.clique and self._better(subtree.clique, best, ranks):
                best = subtree.clique
            if not subtree.completed:
                certified = False
                break
            if root % 64 == 0:
                self._log(f"root {root + 1}/{len(roots)}: best {len(best) + len(fixed)}")

        code = Code.from_words(self.ring, fixed + [vertices[v] for v in best], n=self.n)
        self._assert_distance(code)
        self._log(f"maximum code: {code.size} words, certified={certified}, nodes={nodes}")
        return SearchResult(
            code=code,
            weight=self.weight,
            d=self.d,
            method="branch-and-bound",
            certified_optimal=certified,
            nodes=nodes,
            ordering="weight",
            lower_bound=lower + len(fixed),
            wall_time=time.perf_counter() - started,
        )

    @staticmethod
    def _better(clique: list[int], best: list[int], ranks: list[int]) -> bool:
        """Larger wins; equal sizes go to the lexicographically smaller code.

        `ranks` maps a vertex to its word's lexicographic rank in R^n.
        """
        if len(clique) != len(best):
            return len(clique) > len(best)
        return sorted(ranks[v] for v in clique) < sorted(ranks[v] for v in best)

    def _adjacency(self, vertices: list[Word]) -> list[int]:
        """Neighbourhood bitsets; bit j of entry i is set when i and j are compatible."""
        if not vertices:
            return []
        rows = np.array(vertices, dtype=np.int64)
        adjacency = []
        for i, word in enumerate(vertices):
            row = self.compatible_with(word, rows)
            row[i] = False
            packed = np.packbits(row, bitorder="little").tobytes()
            adjacency.append(int.from_bytes(packed, "little"))
        return adjacency

    @staticmethod
    def _greedy_clique(adjacency: list[int]) -> list[int]:
        clique: list[int] = []
        common = (1 << len(adjacency)) - 1
        while common:
            v = (common & -common).bit_length() - 1
            clique.append(v)
            common &= adjacency[v]
        return clique

    @staticmethod
    def _colour_order(adjacency: list[int], candidates: int) -> tuple[list[int], list[int]]:
        """Greedy colouring; colour k bounds the clique inside the first vertices."""
        order: list[int] = []
        colours: list[int] = []
        uncoloured = candidates
        colour = 0
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                v = (available & -available).bit_length() - 1
                bit = 1 << v
                available &= ~adjacency[v] & ~bit
                uncoloured &= ~bit
                order.append(v)
                colours.append(colour)
        return order, colours

    def _search_subtree(
        self,
        adjacency: list[int],
        ranks: list[int],
        root: int,
        lower: int,
        budget: int,
    ) -> _Subtree:
        """Lexicographically smallest largest clique whose lowest vertex is `root`.

        Only cliques of at least `lower` vertices are kept. Each expansion
        costs one node; the search stops once `budget` nodes are spent and
        keeps the best clique seen so far.
        """
        higher = ~((1 << (root + 1)) - 1)
        start = adjacency[root] & higher
        state = _Subtree(completed=True, nodes=0)
        best_size = lower
        current = [root]

        def record() -> None:
            nonlocal best_size
            if len(current) < best_size:
                return
            if len(current) == best_size and state.clique and not self._better(current, state.clique, ranks):
                return
            best_size = len(current)
            state.clique = list(current)

        def expand(candidates: int) -> None:
            if state.nodes >= budget:
                raise _BudgetExhausted
            state.nodes += 1
            order, colours = self._colour_order(adjacency, candidates)
            for v, colour in zip(reversed(order), reversed(colours)):
                # ties stay open so the lexicographically smaller code can win
                if len(current) + colour < best_size:
                    return
                current.append(v)
                remaining = candidates & adjacency[v]
                if remaining:
                    expand(remaining)
                else:
                    record()
                current.pop()
                candidates &= ~(1 << v)

        if not start:
            record()
            return state
        try:
            expand(start)
        except _BudgetExhausted:
            state.completed = False
        return state

    def _assert_distance(self, code: Code) -> None:
        found = min_distance(code, self.weight)
        if found is not None and found < self.d:
            raise AssertionError(f"search produced minimum distance {found} < {self.d}")

    # --- graph export ---

    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        words = [tuple(int(x) for x in row) for row in self.words]
        graph.add_nodes_from(words)
        for i, word in enumerate(words):
            row = self.compatible_with(word, self.words[i + 1 :])
            graph.add_edges_from((word, words[i + 1 + j]) for j in np.flatnonzero(row))
        return graph


# === Module-level API ===


def greedy_gv(
    ring: FiniteRing,
    n: int,
    d: Fraction | int | str,
    ordering: str = "lex",
    weight: WeightFunction | None = None,
    seed: int = 0,
    seed_words: Sequence[Word] = (),
    progress_callback: Callable[[str], None] | None = None,
) -> SearchResult:
    """Greedy code meeting the Gilbert-Varshamov guarantee (overweight by default)."""
    weight = overweight(ring) if weight is None else weight
    searcher = CodeSearcher(weight, n, d, progress_callback=progress_callback)
    return searcher.greedy(ordering=ordering, seed=seed, seed_words=seed_words)


def max_code(
    ring: FiniteRing,
    n: int,
    d: Fraction | int | str,
    w: WeightFunction | None = None,
    budget: int | None = None,
    fix_zero: bool = True,
    seed_words: Sequence[Word] = (),
    workers: int | None = None,
    progress_callback: Callable[[str], None] | None = None,
) -> SearchResult:
    """Maximum code of minimum distance >= d; certified when the search finished in budget."""
    w = overweight(ring) if w is None else w
    searcher = CodeSearcher(w, n, d, budget=budget, workers=workers, progress_callback=progress_callback)
    return searcher.maximum(fix_zero=fix_zero, seed_words=seed_words)


def compatibility_graph(ring: FiniteRing, n: int, d: Fraction | int | str, w: WeightFunction | None = None) -> nx.Graph:
    """Graph on R^n with an edge wherever both distances are at least d."""
    w = overweight(ring) if w is None else w
    return CodeSearcher(w, n, d).graph()


def list_profile(
    code: Code,
    w: WeightFunction,
    radius: Fraction | int | str,
    cap: int | None = None,
    workers: int | None = None,
) -> ListProfile:
    """Exact maximum of |B(y, radius) ∩ C| over all centers y, with the first maximizing center."""
    radius = parse_rational(radius)
    if radius < 0:
        raise ParameterError("radius must be nonnegative")
    cfg = get_config().enumeration
    ring, n = code.ring, code.n
    centers = enumerate_words(ring, n, cap=cap)
    limit = w.at_most(radius)
    workers = cfg.workers if workers is None else workers
    sub, scaled = ring.sub, w.scaled

    def scan(bounds: tuple[int, int]) -> tuple[int, int]:
        start, stop = bounds
        block = centers[start:stop]
        counts = np.zeros(stop - start, dtype=np.int64)
        for word in code.words:
            distance = np.zeros(stop - start, dtype=np.int64)
            for i, x in enumerate(word):
                distance += scaled[sub[x, block[:, i]]]
            counts += distance <= limit
        best = int(np.argmax(counts))
        return int(counts[best]), start + best

    results = ordered_map(scan, chunk_ranges(len(centers), cfg.chunk_size), workers)
    size, rank = max(results, key=lambda item: (item[0], -item[1]))
    return ListProfile(
        radius=radius,
        max_list_size=size,
        center=tuple(int(x) for x in centers[rank]),
        centers_scanned=len(centers),
    )
