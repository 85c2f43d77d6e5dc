"""Exact gl0 knot homology of marked braid closures via coloring evaluations."""
