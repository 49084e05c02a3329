"""The catalog sample used across tests."""
from liediamond import abelian, filiform, h5, h6, heisenberg, heisenberg_super_even, heisenberg_super_odd
from liediamond.liealg import direct_product


def base_catalog() -> dict:
    """Named base algebras (no products)."""
    out = {"abelian:4": abelian(4), "h5": h5(), "h6": h6()}
    out.update({f"filiform:{n}": filiform(n) for n in range(3, 9)})
    out.update({f"heis:{n}": heisenberg(n) for n in range(1, 5)})
    out.update({f"heis_super:odd,{m}": heisenberg_super_odd(m) for m in (1, 2, 3)})
    out.update({f"heis_super:even,{p},{q}": heisenberg_super_even(p, q) for p, q in ((0, 2), (1, 1), (2, 1))})
    return out


def even_catalog() -> dict:
    return {k: g for k, g in base_catalog().items() if not g.dim_odd}


def small_env_catalog() -> dict:
    """Algebras small enough for the enveloping-algebra property sweeps."""
    names = ["h5", "h6", "filiform:4", "filiform:5", "heis:1", "heis:2", "abelian:4",
             "heis_super:odd,1", "heis_super:odd,2", "heis_super:even,1,1", "heis_super:even,0,2"]
    cat = base_catalog()
    return {k: cat[k] for k in names}


def h5_times_abelian(k: int):
    return direct_product(h5(), abelian(k)) if k else h5()
