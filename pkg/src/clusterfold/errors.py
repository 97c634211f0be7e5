"""Exception hierarchy.

Every domain error carries a short machine-readable ``code`` which the
command-line front end reports verbatim.
"""


class ClusterFoldError(Exception):
    code = "ClusterFoldError"

    def __init__(self, detail="", **info):
        super().__init__(detail)
        self.detail = detail
        self.info = info


def _make(name, doc):
    return type(name, (ClusterFoldError,), {"code": name, "__doc__": doc})


NotSkewSymmetrizable = _make("NotSkewSymmetrizable", "No positive diagonal makes the matrix skew-symmetric.")
NotSymmetrizable = _make("NotSymmetrizable", "No positive diagonal symmetrizes the Cartan matrix.")
MalformedCartan = _make("MalformedCartan", "Diagonal is not 2 or the sign/zero pattern is violated.")
MalformedMatrix = _make("MalformedMatrix", "Shape or label bookkeeping of a matrix is inconsistent.")
NotAPermutation = _make("NotAPermutation", "A generator is not a bijection of the vertex labels.")
GroupTooLarge = _make("GroupTooLarge", "Group enumeration exceeded the configured cap.")
UnknownVertex = _make("UnknownVertex", "A vertex label is not part of the action.")
LabelMismatch = _make("LabelMismatch", "Matrix/quiver labels and action labels disagree.")
NotEquivariant = _make("NotEquivariant", "The matrix is not invariant under the group action.")
NotAdmissible = _make("NotAdmissible", "Two vertices of the same orbit are joined by an arrow.")
InconsistentFold = _make("InconsistentFold", "Folded entry depends on the chosen orbit representative.")
NonIntegerFold = _make("NonIntegerFold", "Folded Cartan entry is not an integer.")
NotAcyclic = _make("NotAcyclic", "The quiver of the matrix has an oriented cycle.")
NotFiniteType = _make("NotFiniteType", "The Cartan matrix is not of finite type.")
FrozenColumn = _make("FrozenColumn", "Mutation was requested at a frozen index.")
UnknownColumn = _make("UnknownColumn", "No such column label.")
FrozenOrbit = _make("FrozenOrbit", "The orbit is not made of mutable columns.")
NonCommutingOrbit = _make("NonCommutingOrbit", "Some entry between two members of the orbit is nonzero.")
AdmissibilityLost = _make("AdmissibilityLost", "An intermediate matrix acquired an entry inside an orbit.")
InexactDivision = _make("InexactDivision", "An exchange relation did not divide exactly in the Laurent ring.")
SearchBudgetExceeded = _make("SearchBudgetExceeded", "Mutation-class search exceeded its budget.")
GraphTruncated = _make("GraphTruncated", "The exchange graph exploration was truncated.")
InvalidWord = _make("InvalidWord", "The word is not reduced or lacks the parabolic prefix.")
UnsupportedGroup = _make("UnsupportedGroup", "No character table is available for this group.")

__all__ = ["ClusterFoldError"] + [
    name for name, obj in list(globals().items())
    if isinstance(obj, type) and issubclass(obj, ClusterFoldError) and obj is not ClusterFoldError
]
