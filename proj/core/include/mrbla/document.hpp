#pragma once

#include "mrbla/algebra.hpp"
#include "mrbla/cochain.hpp"
#include "mrbla/deformation.hpp"

#include <optional>
#include <string>
#include <variant>

namespace mrbla {

/// Versioned JSON container for every file the engine reads or writes.
/// Scalars travel as canonical strings ("p" or "p/q"), never as JSON numbers,
/// so no floating point can leak in. serialize() emits a canonical layout
/// (fixed key order, two-space indent, trailing newline) and
/// parse_document(serialize(x)) == x on every document the engine emits.
inline constexpr const char* document_format_version = "1";

enum class DocumentKind {
    algebra,
    mrb_structure,
    representation,
    mrb_representation,
    cochain,
    deformation,
    isomorphism,
    extension,
    report,
};

const char* to_string(DocumentKind kind);
std::optional<DocumentKind> kind_from_string(const std::string& name);

struct RepresentationDoc {
    LeibnizAlgebra algebra;
    Representation rep;
};

struct MRBRepresentationDoc {
    MRBStructure structure;
    MRBRepresentation rep;
};

/// A single cochain or a combined pair; `g` is emitted only when present.
struct CochainDoc {
    Cochain f;
    std::optional<Cochain> g;
};

struct DeformationDoc {
    TruncatedDeformation defm;
};

struct IsomorphismDoc {
    int dim = 0;
    TruncatedIsomorphism iso;
};

struct ExtensionDoc {
    MRBStructure base;
    MRBRepresentation fiber;
    Cochain psi;
    Cochain chi;
};

/// Machine-readable tool output; body is the payload object as canonical
/// JSON text (kept verbatim so reports round-trip byte-identically).
struct ReportDoc {
    std::string body;
};

using DocumentPayload = std::variant<LeibnizAlgebra, MRBStructure, RepresentationDoc,
                                     MRBRepresentationDoc, CochainDoc, DeformationDoc, IsomorphismDoc,
                                     ExtensionDoc, ReportDoc>;

struct Document {
    DocumentKind kind = DocumentKind::algebra;
    DocumentPayload payload;
};

struct ParseOptions {
    /// Strict mode (default) rejects unknown fields and non-canonical
    /// rationals; lenient mode canonicalizes and ignores unknown fields.
    bool strict = true;
};

/// Throws MalformedInputError with line/column on syntax errors and with a
/// JSON path on semantic errors (wrong shapes, bad scalars, broken
/// invariants such as a deformation whose order-0 terms differ from its base).
Document parse_document(const std::string& text, ParseOptions opts = {});

std::string serialize(const Document& doc);

Document load_document(const std::string& path, ParseOptions opts = {});
void store_document(const std::string& path, const Document& doc);

} // namespace mrbla
