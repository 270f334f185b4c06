__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""The result of a kernelization and the bookkeeping shared by all kernels.

A kernel runs an ordered list of rules to a fixpoint.  Each rule takes the
current KernelContext and returns a Firing when it applies, or None.  A
Firing either decides the instance or describes the change: vertices removed,
edges deleted or added, and how much budget the change spends.
"""

import logging

from UCluster.Graph import to_tuple
from UCluster._Instance import Instance

logger = logging.getLogger(__name__)

YES = "yes"
NO = "no"
REDUCE = "reduce"

SMALL = "SMALL"


class TraceEntry(object):
    """One rule firing, in root ids."""

    __slots__ = ("rule", "k_after", "removed", "edges")

    def __init__(self, rule, k_after, removed=(), edges=()):
        self.rule = rule
        self.k_after = k_after
        self.removed = tuple(removed)
        self.edges = tuple(edges)

    def line(self):
        text = "{} k={} removed={}".format(
            self.rule, self.k_after, ",".join(str(v + 1) for v in self.removed)
        )
        if self.edges:
            text += " edges={}".format(
                ",".join("{}-{}".format(u + 1, v + 1) for u, v in self.edges)
            )
        return text

    def __repr__(self):
        return "TraceEntry({})".format(self.line())


class Firing(object):
    """What a rule did.  Vertex and edge ids are in the ids of the graph the
    rule was applied to."""

    __slots__ = ("rule", "decision", "remove", "delete", "add", "spend",
                 "forced")

    def __init__(self, rule, decision=None, remove=0, delete=(), add=(),
                 spend=0, forced=False):
        self.rule = rule
        self.decision = decision
        self.remove = remove
        self.delete = tuple(delete)
        self.add = tuple(add)
        self.spend = spend
        self.forced = forced


class KernelOutcome(object):
    """Decided(yes|no) or Reduced(instance), plus the trace and the forced
    part of any solution, all in root ids.

    forced_deletions: vertices every solution of the reduced instance must be
        extended with (ucvd).
    forced_edits: (u, v, "delete"|"add") edits made by solution-forcing rules.
    family: parts already committed by the split greedies.
    """

    def __init__(self, variant, original, decision=None, instance=None,
                 trace=(), forced_deletions=(), forced_edits=(), family=()):
        self.variant = variant
        self.original = original
        self.decision = decision
        self.instance = instance
        self.trace = list(trace)
        self.forced_deletions = tuple(sorted(forced_deletions))
        self.forced_edits = tuple(forced_edits)
        self.family = tuple(family)

    @property
    def decided(self):
        return self.decision is not None

    @property
    def reduced(self):
        return self.instance is not None

    @property
    def small(self):
        return bool(self.trace) and self.trace[-1].rule == SMALL

    def trace_lines(self):
        return [t.line() for t in self.trace]

    def stats(self):
        """JSON-serialisable summary."""
        stats = {
            "version": 1,
            "variant": self.variant,
            "n_before": self.original.graph.n,
            "k_before": self.original.k,
            "decided": self.decision,
            "rules_fired": len(self.trace),
        }
        if self.instance is not None:
            stats["n_after"] = self.instance.graph.n
            stats["k_after"] = self.instance.k
        return stats

    def __repr__(self):
        if self.decided:
            return "KernelOutcome({}, decided={})".format(self.variant, self.decision)
        return "KernelOutcome({}, reduced={})".format(self.variant, self.instance)


class KernelContext(object):
    """Mutable state of a running kernel.  The graph itself is immutable and
    replaced on every change; labels keep root ids."""

    def __init__(self, instance):
        self.variant = instance.variant
        self.original = instance
        self.graph = instance.graph
        self.k = instance.k
        self.trace = []
        self.forced_deletions = []
        self.forced_edits = []
        self.family = []
        # per-kernel scratch: derived state, fixed parameters
        self.state = None
        self.params = {}

    def root(self, mask_or_ids):
        ids = to_tuple(mask_or_ids) if isinstance(mask_or_ids, int) else mask_or_ids
        return [self.graph.labels[v] for v in ids]

    def apply(self, firing):
        """Apply a non-deciding firing and record it."""
        g = self.graph
        root_removed = self.root(firing.remove) if firing.remove else []
        edges = []
        if firing.delete:
            edges.extend(g.root_edge(e) for e in firing.delete)
            self.forced_edits.extend(
                g.root_edge(e) + ("delete",) for e in firing.delete
            )
            g = g.remove_edges(firing.delete)
        if firing.add:
            edges.extend(g.root_edge(e) for e in firing.add)
            self.forced_edits.extend(g.root_edge(e) + ("add",) for e in firing.add)
            g = g.add_edges(firing.add)
        if firing.remove:
            if firing.forced:
                self.forced_deletions.extend(root_removed)
            g = g.remove_vertices(firing.remove)
        self.graph = g
        self.k -= firing.spend
        self.state = None
        entry = TraceEntry(firing.rule, self.k, root_removed, sorted(edges))
        self.trace.append(entry)
        logger.debug("{}: {}".format(self.variant, entry.line()))

    def note(self, rule, removed=()):
        entry = TraceEntry(rule, self.k, removed)
        self.trace.append(entry)
        logger.debug("{}: {}".format(self.variant, entry.line()))

    def decide(self, rule, decision):
        self.note(rule)
        return KernelOutcome(
            self.variant, self.original, decision=decision, trace=self.trace,
            forced_deletions=self.forced_deletions,
            forced_edits=self.forced_edits, family=self.family,
        )

    def reduce(self, rule=None):
        if rule is not None:
            self.note(rule)
        return KernelOutcome(
            self.variant, self.original,
            instance=Instance(self.graph, self.k, self.variant),
            trace=self.trace, forced_deletions=self.forced_deletions,
            forced_edits=self.forced_edits, family=self.family,
        )


def run_rules(ctx, rules):
    """Apply rules in priority order until none fires; after each change the
    list restarts from the top.  Returns the KernelOutcome of a deciding or
    reducing firing, or None at the fixpoint."""
    while True:
        for rule in rules:
            firing = rule(ctx)
            if firing is None:
                continue
            if firing.decision == REDUCE:
                return ctx.reduce(firing.rule)
            if firing.decision is not None:
                return ctx.decide(firing.rule, firing.decision)
            ctx.apply(firing)
            if ctx.k < 0:
                return ctx.decide(firing.rule, NO)
            break
        else:
            return None