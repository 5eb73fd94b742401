"""
格指令处理器
"""

from argparse import Namespace
from typing import TYPE_CHECKING, Callable, Dict

from core.lattices import (
    IntLattice,
    bb_derivations,
    bb_discriminant_compare,
    bb_matrix,
    e10_lattice,
    embed_and_complement,
    i110_twisted_by_two,
    isotropic_report,
    lemma_block_matches,
    m0_report,
    m0_sublattice,
    plane_class_gram,
    root_basis_report,
)

from .result import EXIT_FAILED, EXIT_OK, CommandResult

if TYPE_CHECKING:
    from main import EnriquesToolkit


PRESETS: Dict[str, Callable[[], IntLattice]] = {
    "M10": lambda: plane_class_gram(10),
    "M11": lambda: plane_class_gram(11),
    "BB": bb_matrix,
    "EPW": i110_twisted_by_two,
    "E10": e10_lattice,
    "M0": lambda: m0_sublattice(10)[0],
}


def _describe(lattice: IntLattice) -> Dict:
    snf = lattice.discriminant_group()
    return {
        **lattice.to_json(),
        "det": lattice.det(),
        "smith": list(snf.diagonal),
        "cokernel": snf.describe(),
    }


class LatticeHandlers:
    """格指令处理器"""

    def __init__(self, toolkit: "EnriquesToolkit"):
        self.toolkit = toolkit
        self.store = toolkit.store

    def cmd_gram(self, args: Namespace) -> CommandResult:
        """
        指令: lattice gram --preset {M10|M11|BB|EPW|E10|M0} [--out gram.json]
        """
        lattice = PRESETS[args.preset]()
        if args.out:
            self.store.save_lattice(args.out, lattice)
        return CommandResult(_describe(lattice))

    def cmd_smith(self, args: Namespace) -> CommandResult:
        """
        任意整数 Gram 的行列式与 Smith 余核
        指令: lattice smith --in gram.json
        """
        return CommandResult(_describe(self.store.load_gram(args.input)))

    def cmd_facts(self, args: Namespace) -> CommandResult:
        """
        迷向十序列、嵌入与正交补、BB 矩阵
        指令: lattice facts
        """
        embedding = embed_and_complement()
        payload = {
            "isotropic": isotropic_report(),
            "roots": {**root_basis_report(), "dynkin_edges": [list(e) for e in root_basis_report()["dynkin_edges"]]},
            "embedding": embedding.to_dict(),
            "lemma_block_matches": lemma_block_matches(embedding.lemma_block),
            "bb": bb_discriminant_compare(),
            "bb_derivations": bb_derivations(),
            "m0": m0_report(),
        }
        ok = embedding.preserves_products and embedding.complement_orthogonal and payload["bb"]["non_isometric"]
        return CommandResult(payload, EXIT_OK if ok else EXIT_FAILED)
