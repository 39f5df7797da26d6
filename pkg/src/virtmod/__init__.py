"""Decision procedures for virtually simple and virtually semisimple modules
over the integers, F_p[x] and Q[x], and matrix rings over them."""

__version__ = "0.1.0"
