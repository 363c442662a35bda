# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kicked-top map kernels.

Cython twin of `spintangle.kernels.reference`; same functions, same
arithmetic order, C speed.
"""

from libc.math cimport cos, fabs, log, sin, sqrt


def step(double x, double y, double z, double kappa, double p):
    """Advance one kick; returns the new (x, y, z)."""
    cdef double cp = cos(p)
    cdef double sp = sin(p)
    cdef double x1 = x * cp + z * sp
    cdef double z1 = z * cp - x * sp
    cdef double a = kappa * z1
    cdef double ca = cos(a)
    cdef double sa = sin(a)
    return (x1 * ca - y * sa, x1 * sa + y * ca, z1)


def trajectory_into(double x, double y, double z, double kappa, double p,
                    Py_ssize_t n, double[:, ::1] out):
    """Write the n+1 stroboscopic points into out, shape (n+1, 3)."""
    cdef double cp = cos(p)
    cdef double sp = sin(p)
    cdef double x1, z1, a, ca, sa
    cdef Py_ssize_t k
    out[0, 0] = x
    out[0, 1] = y
    out[0, 2] = z
    for k in range(1, n + 1):
        x1 = x * cp + z * sp
        z1 = z * cp - x * sp
        a = kappa * z1
        ca = cos(a)
        sa = sin(a)
        x = x1 * ca - y * sa
        y = x1 * sa + y * ca
        z = z1
        out[k, 0] = x
        out[k, 1] = y
        out[k, 2] = z


def lyapunov(double x, double y, double z, double kappa, double p, Py_ssize_t n):
    """Largest Lyapunov exponent per kick over n kicks (natural log)."""
    cdef double cp = cos(p)
    cdef double sp = sin(p)
    cdef double vx, vy, vz, g, total
    cdef double x1, y1, z1, wx, wy, wz, a, ca, sa, tx, ty, tz, r
    cdef Py_ssize_t k
    if fabs(z) <= 0.9:
        vx = -y
        vy = x
        vz = 0.0
    else:
        vx = 0.0
        vy = -z
        vz = y
    g = sqrt(vx * vx + vy * vy + vz * vz)
    vx /= g
    vy /= g
    vz /= g
    total = 0.0
    for k in range(n):
        x1 = x * cp + z * sp
        z1 = z * cp - x * sp
        y1 = y
        wx = vx * cp + vz * sp
        wz = vz * cp - vx * sp
        wy = vy
        a = kappa * z1
        ca = cos(a)
        sa = sin(a)
        x = x1 * ca - y1 * sa
        y = x1 * sa + y1 * ca
        z = z1
        tx = ca * wx - sa * wy + kappa * (-x1 * sa - y1 * ca) * wz
        ty = sa * wx + ca * wy + kappa * (x1 * ca - y1 * sa) * wz
        tz = wz
        r = tx * x + ty * y + tz * z
        tx -= r * x
        ty -= r * y
        tz -= r * z
        g = sqrt(tx * tx + ty * ty + tz * tz)
        total += log(g)
        vx = tx / g
        vy = ty / g
        vz = tz / g
    return total / n
