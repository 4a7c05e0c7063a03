__all__ = [
    'CellularSheafModel',
    'cech_cohomology',
    'unipotent_twist',
    'cech_c_map',
    'c_map_rank',
]

from .cech import CellularSheafModel, cech_cohomology, unipotent_twist, cech_c_map, c_map_rank
