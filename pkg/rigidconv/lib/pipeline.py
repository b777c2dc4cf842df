# -*- coding: utf-8 -*-
"""
Dependency ordered evaluation of named probes.

A probe graph is a dict mapping node names to either a plain value or a
tuple ``(func, dep, ...)``.  Each dependency is a node name, or a list of
node names whose results are passed to func as one list.  Nodes run once,
after all of their dependencies, in a fixed topological order.
"""
import logging
from collections.abc import Mapping
from copy import copy
from functools import partial
from typing import Any, Dict, List

from rigidconv.core.errors import GraphError

__all__ = ['Graph', 'ProbeGraph']

_log = logging.getLogger(__name__)


class ProbeGraph:
    """
    Evaluate a graph of probes.

    Subclasses set ``probe_graph`` before calling ``super().__init__()``;
    alternatively the graph may be passed to the initializer.
    """
    def __init__(self, graph: Dict[str, Any] = None):
        if graph is not None:
            self.probe_graph = graph
        self._order = self._make_graph().topo_sort()
        self._results = None

    def _make_graph(self) -> 'Graph':
        adjacency = {k: [] for k in self.probe_graph}
        for k, node in self.probe_graph.items():
            if isinstance(node, tuple):
                for dep in node[1:]:
                    deps = [dep] if isinstance(dep, str) else list(dep)
                    for name in deps:
                        if name not in adjacency:
                            raise GraphError(self.probe_graph,
                                             f'node {k!r} depends on unknown '
                                             f'node {name!r}')
                    adjacency[k] += deps
        return Graph(adjacency)

    def execute(self) -> Dict[str, Any]:
        """Run every node once; later calls return the cached results"""
        if self._results is not None:
            return self._results

        order = copy(self._order)
        results = {}

        def _bind(node):
            func, *deps = node
            args = [[results[x] for x in dep] if isinstance(dep, list)
                    else results[dep] for dep in deps]
            return partial(func, *args)

        while order:
            k = order.pop()
            _log.debug("evaluating node %r", k)
            node = self.probe_graph[k]
            results[k] = _bind(node)() if isinstance(node, tuple) else node
        self._results = results
        return self._results


class Graph:
    """Directed graph as an adjacency mapping, edges pointing from a node to
    the nodes it depends on"""
    def __init__(self, graph: Mapping):
        self._graph = {k: list(v) for k, v in graph.items()}

    def _visit(self, node, active, done, stack):
        if node in done:
            return
        if node in active:
            raise GraphError(self._graph, 'Cycle detected')
        active.add(node)
        for dep in self._graph[node]:
            self._visit(dep, active, done, stack)
        active.discard(node)
        done.add(node)
        stack.insert(0, node)

    def topo_sort(self) -> List:
        """
        Topological sorting of the graph

        Returns
        -------
        list
            Order of execution as a stack: every node precedes its
            dependencies, so popping from the end runs dependencies first
        """
        active, done, stack = set(), set(), []
        for node in self._graph:
            self._visit(node, active, done, stack)
        return stack
