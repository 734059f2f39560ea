"""Edge-degenerate helium Hamiltonian verification toolkit"""

__version__ = "0.1.0"
