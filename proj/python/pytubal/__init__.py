from ._pytubal import (
    hilbert_demo_pass,
    hotsvd,
    read_tten,
    reconstruct,
    selftest,
    seq_tr_hotsvd,
    tproduct,
    tr_hotsvd,
    tsvd,
    write_tten,
)

__all__ = [
    "hilbert_demo_pass",
    "hotsvd",
    "read_tten",
    "reconstruct",
    "selftest",
    "seq_tr_hotsvd",
    "tproduct",
    "tr_hotsvd",
    "tsvd",
    "write_tten",
]
