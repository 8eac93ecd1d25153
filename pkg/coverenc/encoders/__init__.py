from .amo import amo_pairwise, amo_product, cardinality_equals_k
from .coverings import (BicliqueCover, CliqueCover, greedy_biclique_cover, greedy_clique_cover, interval_clique_cover,
                        kn_recursive_biclique_cover, read_cover, recursive_cover_weight, write_cover)
from .isp import encode_bc_isp, encode_cc_isp, encode_direct_isp, vertex_literals
from .bva import (BvaReencoder, BvaStep, GridProduct, amo_bva_construct, bva_reencode, bva_step,
                  find_grid_product)
from .intervals import (BlockEncoderParams, BlockRule, IptInstance, encode_interval_isp_block83,
                        encode_interval_isp_recursive, encode_ipt, encode_nip)
