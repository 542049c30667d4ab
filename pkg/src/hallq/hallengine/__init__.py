from .embed import cyclic_embed, cyclic_unembed, embed_dobj, unembed_dobj
from .hall import HallResult, derived_hall, hall_value, middle_terms, count_with_cone
