from simplexnet.lattice.base_lattice import BaseLattice


def get_lattice(kind: str, **params) -> BaseLattice:
    """
    Returns a lattice for the given kind.
    `params` carries kind-specific options (e.g. side for triangular patches).
    """
    if kind == "six-site":
        from simplexnet.lattice.triangular import build_six_site
        return build_six_site()
    elif kind == "triangular-patch":
        from simplexnet.lattice.triangular import build_triangular_patch
        return build_triangular_patch(int(params.get("side", 2)))
    elif kind == "square-network":
        from simplexnet.lattice.square import build_square_network
        return build_square_network(int(params.get("rows", 4)), int(params.get("cols", 6)))
    else:
        raise ValueError(f"Unsupported lattice kind: {kind}")
