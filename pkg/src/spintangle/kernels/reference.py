"""Pure-Python kicked-top map kernels.

Fallback backend; `spintangle.kernels._compiled` implements the same
functions in Cython with identical arithmetic, operation for operation.
One kick = rotation by p about y, then a twist about z by kappa * Z.
"""

from math import cos, log, sin, sqrt


def step(x, y, z, kappa, p):
    """Advance one kick; returns the new (x, y, z)."""
    cp = cos(p)
    sp = sin(p)
    x1 = x * cp + z * sp
    z1 = z * cp - x * sp
    a = kappa * z1
    ca = cos(a)
    sa = sin(a)
    return (x1 * ca - y * sa, x1 * sa + y * ca, z1)


def trajectory_into(x, y, z, kappa, p, n, out):
    """Write the n+1 stroboscopic points into out, shape (n+1, 3)."""
    cp = cos(p)
    sp = sin(p)
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


def lyapunov(x, y, z, kappa, p, n):
    """Largest Lyapunov exponent per kick over n kicks (natural log).

    Propagates one tangent vector alongside the trajectory, renormalizing
    every step; the exponent is the mean log growth rate.
    """
    cp = cos(p)
    sp = sin(p)
    # deterministic tangent seed: unit vector orthogonal to the start point
    if abs(z) <= 0.9:
        vx, vy, vz = -y, x, 0.0
    else:
        vx, vy, vz = 0.0, -z, y
    g = sqrt(vx * vx + vy * vy + vz * vz)
    vx /= g
    vy /= g
    vz /= g
    total = 0.0
    for _ in range(n):
        # rotate point and tangent about y
        x1 = x * cp + z * sp
        z1 = z * cp - x * sp
        y1 = y
        wx = vx * cp + vz * sp
        wz = vz * cp - vx * sp
        wy = vy
        # twist about z by kappa * z1; tangent picks up the dZ term
        a = kappa * z1
        ca = cos(a)
        sa = sin(a)
        x = x1 * ca - y1 * sa
        y = x1 * sa + y1 * ca
        z = z1
        tx = ca * wx - sa * wy + kappa * (-x1 * sa - y1 * ca) * wz
        ty = sa * wx + ca * wy + kappa * (x1 * ca - y1 * sa) * wz
        tz = wz
        # keep the tangent in the tangent plane, then renormalize
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
