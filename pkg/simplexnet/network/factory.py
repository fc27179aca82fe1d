from simplexnet.network.base_contractor import BaseContractor


def get_contractor(method: str, **options) -> BaseContractor:
    """
    Returns a contraction engine by name ("diagonal" or "pairwise").
    `options` are passed to the engine's constructor.
    """
    if method == "diagonal":
        from simplexnet.network.diagonal_contractor import DiagonalContractor
        return DiagonalContractor(**options)
    elif method == "pairwise":
        from simplexnet.network.pairwise_contractor import PairwiseContractor
        return PairwiseContractor(**options)
    else:
        raise ValueError(f"Unsupported contraction method: {method}")
