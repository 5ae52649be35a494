"""
Regular Gaussian models

Conditional independence is read off the conditional covariance (Schur
complement). The conditioning values shift the mean only, so value-level and
set-level statements coincide.
"""

from typing import Optional, Sequence

import numpy as np

from ..graphoid.triplet import check_triplet
from ..graphoid.universe import Universe, VarSet, members
from ..utils.exceptions import RegularityError
from ..utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_TOLERANCE = 1e-9


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


class GaussianModel:
    """Multivariate normal with finite mean and positive-definite covariance"""

    def __init__(self, variables: Sequence[str], mean: Sequence[float],
                 covariance: Sequence[Sequence[float]], tolerance: float = DEFAULT_TOLERANCE):
        self.universe = Universe(variables)
        self.mean = _frozen(mean)
        self.covariance = _frozen(covariance)
        self.tolerance = float(tolerance)
        self._validate()

    def _validate(self) -> None:
        n = self.universe.size
        if self.mean.shape != (n,):
            raise RegularityError(f"mean has shape {self.mean.shape}, expected ({n},)")
        if self.covariance.shape != (n, n):
            raise RegularityError(f"covariance has shape {self.covariance.shape}, expected ({n}, {n})")
        if not np.all(np.isfinite(self.mean)) or not np.all(np.isfinite(self.covariance)):
            raise RegularityError("mean and covariance must be finite")
        if self.tolerance < 0:
            raise RegularityError(f"tolerance must be nonnegative, got {self.tolerance}")
        if np.max(np.abs(self.covariance - self.covariance.T)) > max(self.tolerance, 1e-12):
            raise RegularityError("covariance is not symmetric")
        if np.any(np.diag(self.covariance) <= 0):
            raise RegularityError("variances must be nonzero")
        try:
            np.linalg.cholesky(self.covariance)
        except np.linalg.LinAlgError:
            raise RegularityError("covariance is not positive definite") from None

    @property
    def variables(self):
        return self.universe.names

    def with_tolerance(self, tolerance: float) -> 'GaussianModel':
        return GaussianModel(self.universe.names, self.mean, self.covariance, tolerance)

    def conditional_covariance(self, target: VarSet, z: VarSet) -> np.ndarray:
        """Covariance of target given z (Schur complement); independent of the values of z"""
        check_triplet(target, 0, z, self.universe)
        t_idx = members(target)
        z_idx = members(z)
        sigma_tt = self.covariance[np.ix_(t_idx, t_idx)]
        if not z_idx:
            return np.array(sigma_tt)

        sigma_tz = self.covariance[np.ix_(t_idx, z_idx)]
        sigma_zz = self.covariance[np.ix_(z_idx, z_idx)]
        gain = _solve(sigma_zz, sigma_tz.T).T
        return sigma_tt - gain @ sigma_tz.T

    def __repr__(self) -> str:
        return f"GaussianModel({list(self.universe.names)!r}, tolerance={self.tolerance})"


def _solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve a·x = b for a symmetric positive-definite a"""
    try:
        factor = np.linalg.cholesky(a)
    except np.linalg.LinAlgError:
        raise RegularityError("conditioning block is singular") from None
    return np.linalg.solve(factor.T, np.linalg.solve(factor, b))


def gaussian_conditional(g: GaussianModel, z: VarSet,
                         values: Optional[Sequence[float]] = None) -> GaussianModel:
    """
    Conditional model of the remaining variables given Z = values

    Args:
        g: Gaussian model
        z: Conditioning VarSet
        values: Conditioning values in member order of z (defaults to the mean)

    Returns:
        GaussianModel over the variables outside z
    """
    check_triplet(z, 0, 0, g.universe)
    if z == 0:
        return g

    z_idx = members(z)
    r_idx = [i for i in range(g.universe.size) if i not in set(z_idx)]
    if not r_idx:
        raise RegularityError("conditioning on every variable leaves an empty model")

    if values is None:
        z_values = g.mean[z_idx]
    else:
        z_values = np.asarray(values, dtype=float)
        if z_values.shape != (len(z_idx),):
            raise RegularityError(f"expected {len(z_idx)} conditioning values, got {z_values.shape}")

    sigma_rz = g.covariance[np.ix_(r_idx, z_idx)]
    sigma_zz = g.covariance[np.ix_(z_idx, z_idx)]

    mean = g.mean[r_idx] + sigma_rz @ _solve(sigma_zz, z_values - g.mean[z_idx])
    remaining = 0
    for i in r_idx:
        remaining |= 1 << i
    covariance = g.conditional_covariance(remaining, z)
    # Symmetrize away rounding in the Schur complement
    covariance = (covariance + covariance.T) / 2

    names = [g.universe.names[i] for i in r_idx]
    return GaussianModel(names, mean, covariance, g.tolerance)


def gaussian_independent(g: GaussianModel, x: VarSet, y: VarSet, z: VarSet) -> bool:
    """
    Set-level I(X, Y; Z): every normalized entry of the conditional
    cross-covariance between X and Y given Z is within tolerance of zero
    """
    check_triplet(x, y, z, g.universe)
    if x == 0 or y == 0:
        return True

    cov = g.conditional_covariance(x | y, z)
    order = members(x | y)
    x_pos = [order.index(i) for i in members(x)]
    y_pos = [order.index(i) for i in members(y)]

    scale = np.sqrt(np.diag(cov))
    if np.any(scale <= 0):
        raise RegularityError("conditional variance vanished")
    cross = cov[np.ix_(x_pos, y_pos)] / np.outer(scale[x_pos], scale[y_pos])
    return bool(np.max(np.abs(cross)) <= g.tolerance)
