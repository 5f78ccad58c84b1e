#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spectra {

// Machine-readable failure codes. The CLI maps these onto its exit-code
// taxonomy; library callers can switch on them.
enum class Errc {
    SyntaxError,        // malformed edge-list or coloring document
    LoopEdge,           // edge (v, v)
    DuplicateEdge,      // repeated unordered pair
    Disconnected,       // some vertex unreachable from vertex 0
    VertexOutOfRange,   // edge endpoint outside [0, n)
    NotBipartite,       // odd cycle present (witness carried by exception)
    NotRegular,
    NotBiregular,
    ClassOne,           // chromatic index equals max degree, theorem needs class 2
    DegreeMismatch,     // deficiency domain vertex does not have degree t-1
    EmptyDomain,
    PermutationMismatch, // permutation size does not match coloring's t
    KempeBadStart,       // start vertex incident to both or neither swap color
    KempeEqualColors,
    InvalidColoring,     // coloring failed validation where a valid one is required
    PreconditionViolated,
    PostconditionViolated, // construction output failed its own verification
    GenerationFailure,     // pairing-model sampler exceeded its rejection cap
    BudgetExhausted,
    ConstructionFailed,    // heuristic and fallback both gave up
    IoError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Carries one odd cycle (as a closed vertex walk, first != last) as witness.
class NotBipartiteError : public Error {
public:
    NotBipartiteError(std::vector<int> odd_cycle, const std::string& message)
        : Error(Errc::NotBipartite, message), odd_cycle_(std::move(odd_cycle)) {}

    const std::vector<int>& odd_cycle() const noexcept { return odd_cycle_; }

private:
    std::vector<int> odd_cycle_;
};

} // namespace spectra
