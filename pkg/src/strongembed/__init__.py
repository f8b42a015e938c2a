"""Strong embeddings of 3-connected cubic planar graphs on the projective
plane, torus, Klein bottle and low-genus orientable surfaces."""

__version__ = "0.1.0"
