#pragma once

#include <stdexcept>
#include <string>

namespace sumcat {

/// Base class for all contract violations raised by the category layers.
struct CatError : std::runtime_error {
    explicit CatError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotMonomial : CatError {
    explicit NotMonomial(const std::string& m = "scalar is not a single term") : CatError(m) {}
};
struct ZeroScalar : CatError {
    explicit ZeroScalar(const std::string& m = "scalar is zero") : CatError(m) {}
};
struct ArityMismatch : CatError {
    explicit ArityMismatch(const std::string& m = "label tuple arity mismatch") : CatError(m) {}
};
struct InfiniteScope : CatError {
    explicit InfiniteScope(const std::string& m = "full-group scope requested on an infinite group")
        : CatError(m) {}
};
struct DomainMismatch : CatError {
    explicit DomainMismatch(const std::string& m = "source/target domains do not match") : CatError(m) {}
};
struct MixedFormUnsupported : CatError {
    explicit MixedFormUnsupported(const std::string& m = "mixed explicit/affine forms unsupported here")
        : CatError(m) {}
};
struct AffineAdditionUnsupported : CatError {
    explicit AffineAdditionUnsupported(const std::string& m = "affine addition needs matching index maps")
        : CatError(m) {}
};
struct LabelMismatch : CatError {
    explicit LabelMismatch(const std::string& m = "nonzero component between distinct labels") : CatError(m) {}
};
struct ModeUnsupported : CatError {
    explicit ModeUnsupported(const std::string& m = "verification mode unsupported for this input")
        : CatError(m) {}
};
struct NotInLattice : CatError {
    explicit NotInLattice(const std::string& m = "shift amount is not a lattice element") : CatError(m) {}
};
struct NotLocal : CatError {
    explicit NotLocal(const std::string& m = "module is not local") : CatError(m) {}
};
struct NotConstantOnWindow : CatError {
    explicit NotConstantOnWindow(const std::string& m = "scalar chain is not constant on the window")
        : CatError(m) {}
};
struct NotInvertible : CatError {
    explicit NotInvertible(const std::string& m = "morphism is not invertible") : CatError(m) {}
};
struct Unsupported : CatError {
    explicit Unsupported(const std::string& m = "construction outside the supported fragment") : CatError(m) {}
};

}  // namespace sumcat
