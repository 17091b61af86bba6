"""The mu-deformed oscillator: structure function and energy levels (hbar*omega = 1)."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "MuParameter",
    "CONVERGENCE_MARGIN",
    "as_mu",
    "structure_value",
    "commutator_value",
    "energy_level",
    "spectrum",
]

# Beyond this the three-particle asymptote series alternates with growing terms.
CONVERGENCE_MARGIN = 1.0 / 3.0


@dataclass(frozen=True)
class MuParameter:
    mu: float

    def __post_init__(self):
        if not self.mu >= 0:
            raise ValueError(f"deformation parameter must be >= 0, got {self.mu}")

    @property
    def beyond_margin(self) -> bool:
        """True when truncated series in mu should not be trusted."""
        return self.mu >= CONVERGENCE_MARGIN

    def __float__(self):
        return float(self.mu)


def as_mu(mu) -> float:
    """Validate and unwrap a deformation parameter given as a number or MuParameter."""
    if isinstance(mu, MuParameter):
        return mu.mu
    return MuParameter(mu).mu


def structure_value(n: int, mu) -> float:
    """phi_mu(n) = n / (1 + mu n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    mu = as_mu(mu)
    return n / (1.0 + mu * n)


def commutator_value(n: int, mu) -> float:
    """Eigenvalue of [a, a+] on |n>: phi(n+1) - phi(n)."""
    return structure_value(n + 1, mu) - structure_value(n, mu)


def energy_level(n: int, mu) -> float:
    return 0.5 * (structure_value(n + 1, mu) + structure_value(n, mu))


def spectrum(mu, n_max: int) -> list[tuple[int, float, float]]:
    """Rows (n, phi_mu(n), E_n) for n = 0..n_max."""
    return [(n, structure_value(n, mu), energy_level(n, mu)) for n in range(n_max + 1)]
