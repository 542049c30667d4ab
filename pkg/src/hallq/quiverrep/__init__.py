from .quiver import QuiverPreset, preset_make, parse_quiver, euler_form
from .rep import (Rep, HomSpace, hom_basis, hom_dim, ext_dim, direct_sum, extension,
                  morphism_kernel_cokernel, subrep, quotient, subquotient, zero_rep,
                  aut_order_brute)
from .catalogue import (catalogue, realize, label_dims, label_class, label_key, labels_upto,
                        canon_label, parse_label, certify_indecomposable)
from .decompose import decompose, is_iso_to_labels, aut_order_module, aut_order_labels, multiplicity
from .oracle import submodule_hall_oracle

# alternative name used by callers
indec_realize = realize
