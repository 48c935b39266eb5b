#pragma once

#include <string>
#include <vector>

namespace skinlab {

enum class Verdict { Proved, Refuted, Undecided };

const char* verdict_name(Verdict v);

/// One certified inequality: its identifier, the mathematical statement, and
/// the outcome of interval/exact verification.
struct CertEntry {
    std::string id;
    std::string statement;
    Verdict verdict = Verdict::Undecided;
    unsigned precision_bits = 0; // working precision at which the verdict landed
    double elapsed_ms = 0.0;
    double width_log2 = 0.0; // log2 of the wider final enclosure (diagnostic)
};

struct CertOptions {
    std::string only;   // run only the lemma with this id (empty = all)
    std::string negate; // flip the claimed direction of this id (sanity hook)
};

/// Certify the inequality battery: the cusp-parameter bound (t0), the four
/// cosine comparisons and two integer-power comparisons (A1-A5, A7), and
/// the two assembled profile inequalities (alpha1, alphabeta25).  Every
/// verdict comes from strict separation of exact rational intervals; the
/// working precision starts at 128 bits and doubles to a 4096-bit cap.
/// Entries are returned in a fixed identifier order.
std::vector<CertEntry> verify_all(const CertOptions& opts = {});

/// Known lemma identifiers, in report order.
const std::vector<std::string>& lemma_ids();

bool all_proved(const std::vector<CertEntry>& entries);

/// JSON array of {id, statement, verdict, precision_bits, elapsed_ms}.
std::string report_json(const std::vector<CertEntry>& entries);

} // namespace skinlab
