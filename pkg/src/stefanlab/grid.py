"""Fixed reference grids: polar meshes for the unit disk and the annulus.

Radial nodes exclude the origin (first node at half spacing) and include
r = 1 on both phases, so Dirichlet data and jump extraction live exactly on
shared nodes.  The outer grid includes r = R_Omega, where the homogeneous
Neumann condition is imposed through a ghost node.

Fields on a phase are arrays of shape (Nr, M) with angle along the last
axis; spectral operations act along that axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import sphere


@dataclass(frozen=True)
class PolarGrid:
    """Two-phase polar reference grid with quadrature weights.

    ``wr_in``/``wr_out`` are radial quadrature weights that already include
    the r dr factor (trapezoid plus a midpoint correction for the origin
    cell), so volume integrals are (2 pi / M) * sum(w_r * field).
    """

    m: int
    kmax: int
    r_omega: float
    r_in: np.ndarray
    r_out: np.ndarray
    h_in: float
    h_out: float
    wr_in: np.ndarray
    wr_out: np.ndarray
    theta: np.ndarray

    @classmethod
    def build(cls, kmax, m, nr_in, nr_out, r_omega):
        h_in = 2.0 / (2 * nr_in - 1)          # first node at h/2, last at 1
        r_in = (np.arange(nr_in) + 0.5) * h_in
        h_out = (r_omega - 1.0) / (nr_out - 1)
        r_out = 1.0 + np.arange(nr_out) * h_out

        wr_in = np.full(nr_in, h_in) * r_in
        wr_in[-1] *= 0.5
        wr_in[0] = h_in * r_in[0] + h_in**2 / 8.0  # trapezoid + origin cell [0, h/2]
        wr_out = np.full(nr_out, h_out) * r_out
        wr_out[0] *= 0.5
        wr_out[-1] *= 0.5

        return cls(m=m, kmax=kmax, r_omega=r_omega, r_in=r_in, r_out=r_out,
                   h_in=h_in, h_out=h_out, wr_in=wr_in, wr_out=wr_out,
                   theta=sphere.collocation_angles(m))

    def mesh(self, phase):
        """(R, THETA) meshes of shape (Nr, M) for 'inner' or 'outer'."""
        r = self.r_in if phase == "inner" else self.r_out
        return np.meshgrid(r, self.theta, indexing="ij")

    def volume_integral(self, field_in, field_out):
        """Integral over the reference domain with the polar measure r dr dtheta."""
        dth = 2.0 * np.pi / self.m
        total = 0.0
        if field_in is not None:
            total += float(np.einsum("r,rm->", self.wr_in, field_in))
        if field_out is not None:
            total += float(np.einsum("r,rm->", self.wr_out, field_out))
        return dth * total

    def domain_area(self):
        """Exact |Omega| of the reference/physical ball."""
        return np.pi * self.r_omega**2


def _parity_ghost(field):
    """Value at radius -h/2: same field at (h/2, theta + pi)."""
    m = field.shape[-1]
    return np.roll(field[0:1, :], m // 2, axis=-1)


def radial_derivative(field, h, phase):
    """d/dr of a (Nr, M) field, 2nd order.

    Inner phase uses the polar parity ghost below the first node; boundary
    rows use one-sided 3-point stencils.
    """
    out = np.empty_like(field)
    out[1:-1] = (field[2:] - field[:-2]) / (2.0 * h)
    if phase == "inner":
        ghost = _parity_ghost(field)
        out[0] = (field[1] - ghost[0]) / (2.0 * h)
    else:
        out[0] = (-3.0 * field[0] + 4.0 * field[1] - field[2]) / (2.0 * h)
    out[-1] = (3.0 * field[-1] - 4.0 * field[-2] + field[-3]) / (2.0 * h)
    return out


def radial_second_derivative(field, h, phase):
    """d2/dr2 of a (Nr, M) field, 2nd order, same boundary treatment."""
    out = np.empty_like(field)
    out[1:-1] = (field[2:] - 2.0 * field[1:-1] + field[:-2]) / h**2
    if phase == "inner":
        ghost = _parity_ghost(field)
        out[0] = (ghost[0] - 2.0 * field[0] + field[1]) / h**2
    else:
        out[0] = (2.0 * field[0] - 5.0 * field[1] + 4.0 * field[2] - field[3]) / h**2
    out[-1] = (2.0 * field[-1] - 5.0 * field[-2] + 4.0 * field[-3] - field[-4]) / h**2
    return out


def theta_derivative(field, kmax):
    """Spectral d/dtheta along the angular axis, truncated to degree kmax."""
    coeffs = sphere.coeffs_from_values(field, kmax)
    return sphere.values_from_coeffs(sphere.deriv_theta_coeffs(coeffs), field.shape[-1])


def theta_second_derivative(field, kmax):
    coeffs = sphere.coeffs_from_values(field, kmax)
    d2 = sphere.deriv_theta_coeffs(sphere.deriv_theta_coeffs(coeffs))
    return sphere.values_from_coeffs(d2, field.shape[-1])


def cartesian_gradient(field, grid: PolarGrid, phase):
    """(w_x, w_y) on the polar grid from radial FD + spectral theta derivatives."""
    r, theta = grid.mesh(phase)
    h = grid.h_in if phase == "inner" else grid.h_out
    wr = radial_derivative(field, h, phase)
    wth = theta_derivative(field, grid.kmax)
    c, s = np.cos(theta), np.sin(theta)
    wx = c * wr - s / r * wth
    wy = s * wr + c / r * wth
    return wx, wy


def cartesian_hessian(field, grid: PolarGrid, phase):
    """Cartesian second derivatives (w_xx, w_xy, w_yy) on the polar grid."""
    r, theta = grid.mesh(phase)
    h = grid.h_in if phase == "inner" else grid.h_out
    wr = radial_derivative(field, h, phase)
    wrr = radial_second_derivative(field, h, phase)
    wth = theta_derivative(field, grid.kmax)
    wthth = theta_second_derivative(field, grid.kmax)
    wrth = radial_derivative(wth, h, phase)
    c, s = np.cos(theta), np.sin(theta)
    cross = wrth / r - wth / r**2
    radial_pair = wr / r + wthth / r**2
    wxx = c**2 * wrr + s**2 * radial_pair - 2.0 * c * s * cross
    wyy = s**2 * wrr + c**2 * radial_pair + 2.0 * c * s * cross
    wxy = c * s * (wrr - radial_pair) + (c**2 - s**2) * cross
    return wxx, wxy, wyy
