"""omlkit - Computation on finite orthomodular lattices given as Greechie diagrams."""

__version__ = "1.0.0"
