#ifndef CYCLEDUAL_CERTIFICATE_HPP
#define CYCLEDUAL_CERTIFICATE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycledual/construct.hpp"
#include "cycledual/distance.hpp"

namespace cycledual {

/// Malformed, incomplete or unsupported certificate text.
class CertificateFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * @brief Sectioned key-value certificate text.
 *
 * Layout: "[section]" headers followed by "key = value" lines, blank lines
 * between sections, and a final "format_version = 1" line. Empty values are
 * written as "key =". Parsing is strict: unknown structure, duplicate keys
 * and a missing version trailer are errors.
 */
class CertificateFile {
public:
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;
    };

    static constexpr int kFormatVersion = 1;
    static const std::vector<std::string>& required_sections();

    static CertificateFile parse(const std::string& text);
    std::string to_text() const;

    const std::vector<Section>& sections() const noexcept { return sections_; }
    bool has_section(const std::string& name) const noexcept;
    const std::string* find(const std::string& section, const std::string& key) const noexcept;
    /// Throws CertificateFormatError naming the missing key.
    const std::string& require(const std::string& section, const std::string& key) const;
    /// Replaces an existing value or appends the key, creating the section if needed.
    void set(const std::string& section, const std::string& key, std::string value);

private:
    Section* section(const std::string& name) noexcept;
    std::vector<Section> sections_;
};

CertificateFile to_certificate_file(const SelfDualCertificate& cert);
std::string serialize(const SelfDualCertificate& cert);

/// Writes distance_method / distance_value / distance_exact into [bounds].
void record_distance(CertificateFile& file, const DistanceReport& report);

struct CheckOutcome {
    std::string name;
    /// Verdict stored in [checks]; nullopt for consistency checks that are
    /// implied by the file rather than recorded in it.
    std::optional<bool> recorded;
    bool recomputed = false;

    bool ok() const noexcept { return recomputed && (!recorded || *recorded); }
};

struct VerifyReport {
    std::vector<CheckOutcome> checks;

    bool ok() const noexcept;
};

/// Re-derives every check from the recorded parameters and generators.
/// Throws CertificateFormatError when the file cannot be interpreted.
VerifyReport verify_certificate(const CertificateFile& file);

/// The outer code as recorded: alphabet, kind, inner length, its [u | u + v]
/// basis from the recorded generators, and the operative floor.
struct CertificateCodes {
    Field alphabet;
    DualKind kind;
    std::uint64_t n_inner;
    Matrix basis;
    std::uint64_t floor_min;
};

CertificateCodes load_codes(const CertificateFile& file);

}  // namespace cycledual

#endif  // CYCLEDUAL_CERTIFICATE_HPP
