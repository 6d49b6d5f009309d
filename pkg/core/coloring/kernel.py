# -*- coding: utf-8 -*-
"""
List edge coloring from a sequential coloring.

A sequential coloring c orients the line graph of H: at a common X-vertex an
edge points to the edges of larger color, at a common Z-vertex to the edges
of smaller color. Every edge then has out-degree at most d(x) - 1, and kernels
of this orientation are exactly the stable matchings where X-vertices prefer
large colors and Z-vertices prefer small ones.
"""
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from loguru import logger

from core.error import NotSequential, Incomplete
from core.coloring.multigraph import AuxMultigraph, EdgeColoring, EdgeInstance, is_sequential


class PreferenceSystem(object):
    """sequential colors of H plus the conflict orientation they induce"""

    def __init__(self, graph: AuxMultigraph, coloring: EdgeColoring):
        self.graph = graph
        self._color = coloring.colors
        self._at_x: Dict[int, List[EdgeInstance]] = {}
        self._at_z: Dict[int, List[EdgeInstance]] = {}
        for edge in graph.edges:
            self._at_x.setdefault(edge[0], []).append(edge)
            self._at_z.setdefault(edge[1], []).append(edge)

    def color(self, edge: EdgeInstance) -> int:
        return self._color[edge]

    def x_rank(self, edges: Iterable[EdgeInstance]) -> List[EdgeInstance]:
        """most preferred first at the X end: decreasing color"""
        return sorted(edges, key=lambda e: -self._color[e])

    def out_neighbors(self, edge: EdgeInstance) -> Tuple[EdgeInstance, ...]:
        c = self._color[edge]
        at_x = [f for f in self._at_x[edge[0]] if f != edge and self._color[f] > c]
        at_z = [f for f in self._at_z[edge[1]] if f != edge and self._color[f] < c]
        return tuple(at_x + at_z)

    def out_degree(self, edge: EdgeInstance) -> int:
        return len(self.out_neighbors(edge))

    def dominates(self, f: EdgeInstance, e: EdgeInstance) -> bool:
        """e -> f in the orientation"""
        if f == e:
            return False
        if f[0] == e[0] and self._color[f] > self._color[e]:
            return True
        return f[1] == e[1] and self._color[f] < self._color[e]


def build_preferences(graph: AuxMultigraph, seq: EdgeColoring) -> PreferenceSystem:
    """
    Raises:
        NotSequential: seq is not sequential for the X-degrees of graph
    """
    d = graph.x_degrees()
    if not is_sequential(graph, seq, d):
        raise NotSequential('coloring is not sequential for d={}'.format(list(d)))
    prefs = PreferenceSystem(graph, seq)
    for edge in graph.edges:
        bound = d[edge[0] - 1] - 1
        if prefs.out_degree(edge) > bound:
            raise NotSequential('edge {} has out-degree {} > {}'.format(edge, prefs.out_degree(edge), bound))
    return prefs


def stable_kernel(edges: Iterable[EdgeInstance], prefs: PreferenceSystem) -> Tuple[EdgeInstance, ...]:
    """
    Gale-Shapley on the edge subset S: each X-vertex proposes its edges in
    decreasing color, each Z-vertex keeps the proposal of smallest color.
    The result is a matching of S dominating every other edge of S.
    """
    subset = sorted(set(edges))
    if not subset:
        return ()
    queue: Dict[int, List[EdgeInstance]] = {}
    for edge in subset:
        queue.setdefault(edge[0], []).append(edge)
    queue = {x: prefs.x_rank(es) for x, es in queue.items()}
    cursor = {x: 0 for x in queue}
    held: Dict[int, EdgeInstance] = {}
    free = sorted(queue)
    while free:
        x = free.pop(0)
        if cursor[x] >= len(queue[x]):
            continue
        edge = queue[x][cursor[x]]
        cursor[x] += 1
        z = edge[1]
        current = held.get(z)
        if current is None:
            held[z] = edge
        elif prefs.color(edge) < prefs.color(current):
            # z 只留颜色最小的那条
            held[z] = edge
            free.append(current[0])
        else:
            free.append(x)
    return tuple(sorted(held.values()))


def is_kernel(edges: Iterable[EdgeInstance], kernel: Iterable[EdgeInstance], prefs: PreferenceSystem) -> bool:
    """independent (a matching) and absorbing within `edges`"""
    subset, chosen = set(edges), set(kernel)
    if not chosen <= subset:
        return False
    xs = [e[0] for e in chosen]
    zs = [e[1] for e in chosen]
    if len(xs) != len(set(xs)) or len(zs) != len(set(zs)):
        return False
    return all(any(prefs.dominates(f, e) for f in chosen) for e in subset - chosen)


class ColorLists(object):
    """
    L(a) for every X-vertex a; the edges at a inherit L(a).

    Symbols may be any sortable hashable values.
    """

    def __init__(self, lists: Mapping[int, Iterable[Hashable]]):
        self._lists = {int(x): frozenset(symbols) for x, symbols in lists.items()}

    @classmethod
    def trivial(cls, d: Sequence[int]) -> 'ColorLists':
        """L(x_i) = {1, ..., d_i}"""
        return cls({i: range(1, v + 1) for i, v in enumerate(d, start=1)})

    def of(self, x: int) -> frozenset:
        return self._lists.get(x, frozenset())

    def symbols(self) -> List[Hashable]:
        return sorted(set().union(*self._lists.values())) if self._lists else []

    def fits(self, graph: AuxMultigraph) -> bool:
        return all(len(self.of(i)) == graph.x_degree(i) for i in range(1, graph.k + 1))

    def __repr__(self):
        return 'ColorLists({})'.format({x: sorted(s) for x, s in sorted(self._lists.items())})


def list_edge_color(graph: AuxMultigraph, seq: EdgeColoring, lists: ColorLists,
                    prefs: Optional[PreferenceSystem] = None) -> Dict[EdgeInstance, Hashable]:
    """
    Colors every edge of graph from the list of its X end, properly at both ends.

    Symbols are processed in ascending order; each round colors a stable
    kernel of the uncolored edges whose list holds the symbol.

    Raises:
        NotSequential: seq is not sequential
        Incomplete: edges left uncolored
    """
    if not lists.fits(graph):
        raise ValueError('list sizes {} do not match X-degrees {}'.format(
            [len(lists.of(i)) for i in range(1, graph.k + 1)], list(graph.x_degrees())))
    if prefs is None:
        prefs = build_preferences(graph, seq)
    uncolored: Set[EdgeInstance] = set(graph.edges)
    assignment: Dict[EdgeInstance, Hashable] = {}
    rounds = 0
    # 符号从小到大, 每轮取一个 kernel
    for symbol in lists.symbols():
        if not uncolored:
            break
        candidates = [e for e in uncolored if symbol in lists.of(e[0])]
        if not candidates:
            continue
        for edge in stable_kernel(candidates, prefs):
            assignment[edge] = symbol
            uncolored.discard(edge)
        rounds += 1
    logger.debug('list_edge_color: {} edges, {} rounds', len(assignment), rounds)
    if uncolored:
        logger.error('list_edge_color left {} edge(s) uncolored', len(uncolored))
        raise Incomplete(sorted(uncolored))
    return assignment


def is_list_coloring(graph: AuxMultigraph, assignment: Mapping[EdgeInstance, Hashable], lists: ColorLists) -> bool:
    """complete, every symbol from its list, distinct symbols around each vertex"""
    if set(assignment) != set(graph.edges):
        return False
    if any(symbol not in lists.of(e[0]) for e, symbol in assignment.items()):
        return False
    seen = set()
    for (i, j, _), symbol in assignment.items():
        if ('x', i, symbol) in seen or ('z', j, symbol) in seen:
            return False
        seen.add(('x', i, symbol))
        seen.add(('z', j, symbol))
    return True
