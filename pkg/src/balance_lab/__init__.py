"""Balanced copies of graphs in 2-list edge colorings of complete graphs."""
