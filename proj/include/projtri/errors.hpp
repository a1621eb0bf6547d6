#pragma once

#include <stdexcept>
#include <string>

namespace projtri {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vertex label outside 1..64 (or outside 1..n where an n is fixed).
struct VertexOutOfRange : Error {
    using Error::Error;
};

// A declared vertex appears in no facet.
struct GhostVertex : Error {
    explicit GhostVertex(int v)
        : Error("vertex " + std::to_string(v) + " appears in no facet"), vertex(v) {}
    int vertex;
};

// More than 64 vertices requested, or past a tighter documented cap.
struct TooManyVertices : Error {
    using Error::Error;
};

// An operation needed a face of the complex and got a non-face.
struct NotAFace : Error {
    using Error::Error;
};

// An operation defined only for pure complexes (of a stated dimension).
struct NotPure : Error {
    using Error::Error;
};

// Face enumeration would exceed the configured budget.
struct FaceCountOverflow : Error {
    using Error::Error;
};

// Group closure exceeded the materialization cap.
struct OrderCapExceeded : Error {
    using Error::Error;
};

// A claimed group action does not map the facet set onto itself,
// or its degree does not match the vertex count.
struct NotAnAction : Error {
    using Error::Error;
};

// The subgroup passed where a normal subgroup is required is not normal.
struct NotNormal : Error {
    using Error::Error;
};

// A search ran out of its node/time budget. The checkpoint, if one was
// configured, has been written and can be resumed.
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& what, std::string checkpoint)
        : Error(what), checkpoint_path(std::move(checkpoint)) {}
    std::string checkpoint_path;
};

// Seed facets are already inconsistent with the search constraints.
struct InfeasibleSeed : Error {
    using Error::Error;
};

// Malformed text input (complex / group / checkpoint files).
struct FormatError : Error {
    using Error::Error;
};

}  // namespace projtri
