"""Whitney forms on flat pseudo-Riemannian manifolds and a spacetime wave integrator."""

__version__ = "0.1.0"
