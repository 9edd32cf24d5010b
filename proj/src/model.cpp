#include "aibomkit/model.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace aibomkit {

namespace {

template <class E>
std::span<const std::string_view> tokens_of() noexcept {
    return {EnumTraits<E>::tokens.data(), EnumTraits<E>::tokens.size()};
}

constexpr bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

bool digits_at(std::string_view s, std::size_t pos, std::size_t n, int& out) noexcept {
    if (pos + n > s.size()) return false;
    int v = 0;
    for (std::size_t i = pos; i < pos + n; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        v = v * 10 + (s[i] - '0');
    }
    out = v;
    return true;
}

}  // namespace

std::span<const std::string_view> enum_tokens(EnumKind kind) noexcept {
    switch (kind) {
        case EnumKind::presence: return tokens_of<Presence>();
        case EnumKind::software_purpose: return tokens_of<SoftwarePurpose>();
        case EnumKind::dataset_type: return tokens_of<DatasetType>();
        case EnumKind::energy_unit: return tokens_of<EnergyUnit>();
        case EnumKind::safety_risk: return tokens_of<SafetyRisk>();
        case EnumKind::confidentiality_level: return tokens_of<ConfidentialityLevel>();
        case EnumKind::dataset_availability: return tokens_of<DatasetAvailability>();
        case EnumKind::relationship_type: return tokens_of<RelationshipType>();
    }
    return {};
}

std::string_view enum_kind_name(EnumKind kind) noexcept {
    switch (kind) {
        case EnumKind::presence: return EnumTraits<Presence>::name;
        case EnumKind::software_purpose: return EnumTraits<SoftwarePurpose>::name;
        case EnumKind::dataset_type: return EnumTraits<DatasetType>::name;
        case EnumKind::energy_unit: return EnumTraits<EnergyUnit>::name;
        case EnumKind::safety_risk: return EnumTraits<SafetyRisk>::name;
        case EnumKind::confidentiality_level: return EnumTraits<ConfidentialityLevel>::name;
        case EnumKind::dataset_availability: return EnumTraits<DatasetAvailability>::name;
        case EnumKind::relationship_type: return EnumTraits<RelationshipType>::name;
    }
    return {};
}

std::optional<EnumKind> enum_kind_from_name(std::string_view name) noexcept {
    for (auto k : {EnumKind::presence, EnumKind::software_purpose, EnumKind::dataset_type,
                   EnumKind::energy_unit, EnumKind::safety_risk, EnumKind::confidentiality_level,
                   EnumKind::dataset_availability, EnumKind::relationship_type}) {
        if (enum_kind_name(k) == name) return k;
    }
    return std::nullopt;
}

std::string_view parse_enum(std::string_view token, EnumKind kind) {
    for (auto t : enum_tokens(kind)) {
        if (t == token) return t;
    }
    throw UnknownToken(std::string(enum_kind_name(kind)), std::string(token));
}

// ---------------------------------------------------------------------------

std::optional<Timestamp> Timestamp::try_parse(std::string_view s) noexcept {
    using namespace std::chrono;
    // YYYY-MM-DDThh:mm:ssZ
    if (s.size() != 20) return std::nullopt;
    if (s[4] != '-' || s[7] != '-' || s[10] != 'T' || s[13] != ':' || s[16] != ':' || s[19] != 'Z')
        return std::nullopt;
    int y, mo, d, h, mi, se;
    if (!digits_at(s, 0, 4, y) || !digits_at(s, 5, 2, mo) || !digits_at(s, 8, 2, d) ||
        !digits_at(s, 11, 2, h) || !digits_at(s, 14, 2, mi) || !digits_at(s, 17, 2, se))
        return std::nullopt;
    const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                             day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h > 23 || mi > 59 || se > 59) return std::nullopt;
    return Timestamp{sys_days{ymd} + hours{h} + minutes{mi} + seconds{se}};
}

Timestamp Timestamp::parse(std::string_view text) {
    if (auto t = try_parse(text)) return *t;
    throw BadTimestamp(std::string(text));
}

std::string Timestamp::to_string() const {
    using namespace std::chrono;
    const auto day_point = floor<days>(instant_);
    const year_month_day ymd{day_point};
    const hh_mm_ss hms{instant_ - day_point};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                  static_cast<int>(hms.seconds().count()));
    return buf;
}

// ---------------------------------------------------------------------------

bool is_valid_iri(std::string_view text) noexcept {
    const auto s = trim(text);
    const auto colon = s.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == s.size()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < colon; ++i) {
        const char c = s[i];
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    for (char c : s) {
        if (static_cast<unsigned char>(c) <= 0x20 || c == 0x7f) return false;
    }
    return true;
}

std::string validate_iri(std::string_view text) {
    if (!is_valid_iri(text)) throw BadIri(std::string(text));
    return std::string(trim(text));
}

// ---------------------------------------------------------------------------

std::optional<Decimal> Decimal::try_parse(std::string_view s) noexcept {
    // xsd:decimal: optional sign, digits with at most one '.', at least one digit, no exponent.
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = 0;
    bool dot = false;
    for (; i < s.size(); ++i) {
        if (s[i] >= '0' && s[i] <= '9') {
            ++digits;
        } else if (s[i] == '.' && !dot) {
            dot = true;
        } else {
            return std::nullopt;
        }
    }
    if (digits == 0) return std::nullopt;
    double v = 0.0;
    const char* first = s.data() + (s.front() == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        // from_chars rejects forms like "5." on some libstdc++ versions; fall back.
        try {
            v = std::stod(std::string(s));
        } catch (...) {
            return std::nullopt;
        }
    }
    return Decimal{std::string(s), v};
}

Decimal Decimal::parse(std::string_view text) {
    if (auto d = try_parse(text)) return *d;
    throw BadDecimal(std::string(text));
}

// ---------------------------------------------------------------------------

LicenseTarget LicenseTarget::classify(std::string_view text) {
    const auto s = trim(text);
    auto ends_with = [&](std::string_view suffix) {
        return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
    };
    LicenseTarget t;
    t.value = std::string(s);
    if (s == "NOASSERTION" || ends_with("/NoAssertionLicense")) {
        t.kind = LicenseTargetKind::no_assertion;
    } else if (s == "NONE" || ends_with("/NoneLicense")) {
        t.kind = LicenseTargetKind::none;
    } else if (s.starts_with(kListedLicensePrefix) && s.size() > kListedLicensePrefix.size()) {
        t.kind = LicenseTargetKind::listed;
    } else {
        t.kind = LicenseTargetKind::expression;
    }
    return t;
}

// ---------------------------------------------------------------------------

const std::optional<std::string>& element_id(const Element& e) noexcept {
    return std::visit(
        [](const auto& x) -> const std::optional<std::string>& {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AIPackage> || std::is_same_v<T, DatasetPackage>) {
                return x.core.spdx_id;
            } else {
                return x.spdx_id;
            }
        },
        e);
}

std::string_view element_kind(const Element& e) noexcept {
    struct {
        std::string_view operator()(const AIPackage&) const { return "AIPackage"; }
        std::string_view operator()(const DatasetPackage&) const { return "DatasetPackage"; }
        std::string_view operator()(const FileArtifact&) const { return "File"; }
        std::string_view operator()(const Agent& a) const { return to_token(a.kind); }
        std::string_view operator()(const LicenseElement&) const { return "LicenseExpression"; }
        std::string_view operator()(const GenericElement& g) const { return g.type_tag; }
    } visitor;
    return std::visit(visitor, e);
}

std::string_view element_name(const Element& e) noexcept {
    struct {
        std::string_view operator()(const AIPackage& p) const { return p.core.name; }
        std::string_view operator()(const DatasetPackage& p) const { return p.core.name; }
        std::string_view operator()(const FileArtifact& f) const { return f.name; }
        std::string_view operator()(const Agent& a) const { return a.name; }
        std::string_view operator()(const LicenseElement& l) const { return l.expression; }
        std::string_view operator()(const GenericElement& g) const {
            auto it = g.properties.find("name");
            if (it != g.properties.end() && it->second.is_string())
                return it->second.get_ref<const std::string&>();
            return {};
        }
    } visitor;
    return std::visit(visitor, e);
}

std::string_view to_string(Severity s) noexcept {
    switch (s) {
        case Severity::error: return "error";
        case Severity::warning: return "warning";
        case Severity::info: return "info";
    }
    return "error";
}

}  // namespace aibomkit
