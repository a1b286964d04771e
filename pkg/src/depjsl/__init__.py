__version__ = "0.1.0"

__all__ = [
    "finrel",
    "jsl",
    "dep",
    "equivalence",
    "tensor",
    "demorgan",
    "freecat",
    "io",
    "checks",
    "cli",
]
