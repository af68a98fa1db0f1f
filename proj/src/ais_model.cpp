#include "habit/ais_model.hpp"

#include <fmt/format.h>

#include <charconv>
#include <chrono>
#include <cmath>

namespace habit {

namespace {

constexpr double kSogNotAvailable = 102.3;
constexpr double kCogNotAvailable = 360.0;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<double> to_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

template <typename Int>
bool to_int(std::string_view s, Int& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

std::int64_t civil_to_ms(int y, unsigned mo, unsigned d, int h, int mi, int s) {
    using namespace std::chrono;
    const year_month_day ymd{year{y}, month{mo}, day{d}};
    if (!ymd.ok() || h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 60) {
        throw ParseError("invalid calendar time");
    }
    const auto days = sys_days{ymd}.time_since_epoch().count();
    return ((static_cast<std::int64_t>(days) * 24 + h) * 60 + mi) * 60'000 +
           static_cast<std::int64_t>(s) * 1000;
}

// Parses fixed-width digits at s[pos, pos+n).
int digits(std::string_view s, std::size_t pos, std::size_t n) {
    if (pos + n > s.size()) throw ParseError("truncated timestamp");
    int v = 0;
    for (std::size_t i = pos; i < pos + n; ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("non-digit in timestamp");
        v = v * 10 + (s[i] - '0');
    }
    return v;
}

std::int64_t parse_fraction_ms(std::string_view s, std::size_t& pos) {
    if (pos >= s.size() || (s[pos] != '.' && s[pos] != ',')) return 0;
    ++pos;
    std::int64_t ms = 0;
    int n = 0;
    const std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        if (n < 3) {
            ms = ms * 10 + (s[pos] - '0');
            ++n;
        }
        ++pos;
    }
    if (pos == start) throw ParseError("empty fractional seconds");
    while (n < 3) {
        ms *= 10;
        ++n;
    }
    return ms;
}

std::int64_t parse_iso(std::string_view s) {
    // YYYY-MM-DD[T ]HH:MM:SS[.fff][Z|+HH:MM|+HHMM|+HH]
    if (s.size() < 19 || s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != ' ') ||
        s[13] != ':' || s[16] != ':') {
        throw ParseError("malformed ISO-8601 timestamp");
    }
    std::int64_t ms = civil_to_ms(digits(s, 0, 4), digits(s, 5, 2), digits(s, 8, 2),
                                  digits(s, 11, 2), digits(s, 14, 2), digits(s, 17, 2));
    std::size_t pos = 19;
    ms += parse_fraction_ms(s, pos);
    if (pos == s.size()) return ms;
    if (s[pos] == 'Z' || s[pos] == 'z') {
        if (pos + 1 != s.size()) throw ParseError("trailing characters after timestamp");
        return ms;
    }
    if (s[pos] != '+' && s[pos] != '-') throw ParseError("malformed timezone offset");
    const int sign = s[pos] == '-' ? -1 : 1;
    ++pos;
    const int oh = digits(s, pos, 2);
    pos += 2;
    int om = 0;
    if (pos < s.size()) {
        if (s[pos] == ':') ++pos;
        om = digits(s, pos, 2);
        pos += 2;
    }
    if (pos != s.size() || oh > 23 || om > 59) throw ParseError("malformed timezone offset");
    return ms - sign * (static_cast<std::int64_t>(oh) * 60 + om) * 60'000;
}

std::int64_t parse_dmy(std::string_view s) {
    // DD/MM/YYYY HH:MM:SS[.fff]
    if (s.size() < 19 || s[2] != '/' || s[5] != '/' || s[10] != ' ' || s[13] != ':' || s[16] != ':') {
        throw ParseError("malformed day/month/year timestamp");
    }
    std::int64_t ms = civil_to_ms(digits(s, 6, 4), digits(s, 3, 2), digits(s, 0, 2),
                                  digits(s, 11, 2), digits(s, 14, 2), digits(s, 17, 2));
    std::size_t pos = 19;
    ms += parse_fraction_ms(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters after timestamp");
    return ms;
}

}  // namespace

std::string_view to_string(RejectReason r) {
    switch (r) {
        case RejectReason::InvalidCoordinates: return "InvalidCoordinates";
        case RejectReason::DuplicateRecord: return "DuplicateRecord";
        case RejectReason::OutOfOrder: return "OutOfOrder";
        case RejectReason::KinematicOutlier: return "KinematicOutlier";
        case RejectReason::MalformedField: return "MalformedField";
    }
    return "Unknown";
}

std::optional<TimeFormat> parse_time_format(std::string_view name) {
    if (name == "iso8601") return TimeFormat::Iso8601;
    if (name == "epoch_s") return TimeFormat::EpochSeconds;
    if (name == "epoch_ms") return TimeFormat::EpochMillis;
    if (name == "dmy") return TimeFormat::DayMonthYear;
    return std::nullopt;
}

std::string_view to_string(TimeFormat f) {
    switch (f) {
        case TimeFormat::Iso8601: return "iso8601";
        case TimeFormat::EpochSeconds: return "epoch_s";
        case TimeFormat::EpochMillis: return "epoch_ms";
        case TimeFormat::DayMonthYear: return "dmy";
    }
    return "iso8601";
}

std::int64_t parse_timestamp(std::string_view text, TimeFormat fmt) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty timestamp");
    switch (fmt) {
        case TimeFormat::Iso8601: return parse_iso(s);
        case TimeFormat::DayMonthYear: return parse_dmy(s);
        case TimeFormat::EpochMillis: {
            std::int64_t v = 0;
            if (!to_int(s, v)) throw ParseError(fmt::format("bad epoch milliseconds '{}'", s));
            return v;
        }
        case TimeFormat::EpochSeconds: {
            std::int64_t v = 0;
            if (to_int(s, v)) return v * 1000;
            const auto d = to_double(s);
            if (!d) throw ParseError(fmt::format("bad epoch seconds '{}'", s));
            return static_cast<std::int64_t>(std::llround(*d * 1000.0));
        }
    }
    throw ParseError("unknown time format");
}

std::string format_timestamp(std::int64_t ts_ms) {
    using namespace std::chrono;
    std::int64_t days = ts_ms / 86'400'000;
    std::int64_t rem = ts_ms % 86'400'000;
    if (rem < 0) {
        rem += 86'400'000;
        --days;
    }
    const year_month_day ymd{sys_days{std::chrono::days{days}}};
    const int h = static_cast<int>(rem / 3'600'000);
    const int mi = static_cast<int>(rem / 60'000 % 60);
    const int s = static_cast<int>(rem / 1000 % 60);
    const int ms = static_cast<int>(rem % 1000);
    std::string out = fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}", static_cast<int>(ymd.year()),
                                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), h, mi, s);
    if (ms != 0) out += fmt::format(".{:03d}", ms);
    out += 'Z';
    return out;
}

std::vector<std::string> split_row(std::string_view line, char delim) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == delim) {
            out.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r' && c != '\n') {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

ColumnMap resolve_schema(const Schema& schema, std::string_view header) {
    const auto names = split_row(header, schema.delimiter);
    auto find = [&](const std::string& name) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (trim(names[i]) == name) return static_cast<int>(i);
        }
        return -1;
    };
    ColumnMap m;
    m.delimiter = schema.delimiter;
    m.time_format = schema.time_format;
    const std::pair<int*, const std::string*> required[] = {
        {&m.vessel_id, &schema.vessel_id}, {&m.ts, &schema.ts}, {&m.lon, &schema.lon}, {&m.lat, &schema.lat}};
    for (auto [slot, name] : required) {
        *slot = find(*name);
        if (*slot < 0) throw ParseError(fmt::format("required column '{}' not found in header", *name));
    }
    m.sog = schema.sog.empty() ? -1 : find(schema.sog);
    m.cog = schema.cog.empty() ? -1 : find(schema.cog);
    return m;
}

AisRecord parse_record(std::string_view line, const ColumnMap& cols) {
    const auto f = split_row(line, cols.delimiter);
    auto field = [&](int idx, const char* name) -> std::string_view {
        if (idx < 0 || static_cast<std::size_t>(idx) >= f.size()) {
            throw ParseError(fmt::format("missing {} column", name));
        }
        return trim(f[static_cast<std::size_t>(idx)]);
    };

    AisRecord r;
    r.vessel_id = std::string(field(cols.vessel_id, "vessel_id"));
    if (r.vessel_id.empty()) throw ParseError("empty vessel_id");
    r.ts = parse_timestamp(field(cols.ts, "ts"), cols.time_format);

    const auto lon = to_double(field(cols.lon, "lon"));
    if (!lon) throw ParseError(fmt::format("unparseable lon '{}'", field(cols.lon, "lon")));
    const auto lat = to_double(field(cols.lat, "lat"));
    if (!lat) throw ParseError(fmt::format("unparseable lat '{}'", field(cols.lat, "lat")));
    r.lon = *lon;
    r.lat = *lat;

    auto optional_field = [&](int idx, const char* name) -> std::optional<double> {
        if (idx < 0 || static_cast<std::size_t>(idx) >= f.size()) return std::nullopt;
        const std::string_view s = trim(f[static_cast<std::size_t>(idx)]);
        if (s.empty()) return std::nullopt;
        const auto v = to_double(s);
        if (!v) throw ParseError(fmt::format("unparseable {} '{}'", name, s));
        return v;
    };
    r.sog = optional_field(cols.sog, "sog");
    if (r.sog && *r.sog == kSogNotAvailable) r.sog.reset();
    r.cog = optional_field(cols.cog, "cog");
    if (r.cog && *r.cog == kCogNotAvailable) r.cog.reset();
    return r;
}

std::string serialize_record(const AisRecord& r, char delim) {
    std::string id = r.vessel_id;
    if (id.find(delim) != std::string::npos || id.find('"') != std::string::npos) {
        std::string q = "\"";
        for (char c : id) {
            if (c == '"') q += '"';
            q += c;
        }
        id = q + "\"";
    }
    std::string out = fmt::format("{}{}{}{}{}{}{}", id, delim, format_timestamp(r.ts), delim, r.lon, delim, r.lat);
    out += delim;
    if (r.sog) out += fmt::format("{}", *r.sog);
    out += delim;
    if (r.cog) out += fmt::format("{}", *r.cog);
    return out;
}

std::string identity_header(char delim) {
    return fmt::format("vessel_id{0}ts{0}lon{0}lat{0}sog{0}cog", delim);
}

std::optional<RejectReason> validate_record(const AisRecord& r) {
    if (r.vessel_id.empty()) return RejectReason::MalformedField;
    if (!std::isfinite(r.lon) || !std::isfinite(r.lat)) return RejectReason::InvalidCoordinates;
    if (r.lon < -180.0 || r.lon > 180.0 || r.lat < -90.0 || r.lat > 90.0) {
        return RejectReason::InvalidCoordinates;
    }
    if (r.lon == 0.0 && r.lat == 0.0) return RejectReason::InvalidCoordinates;
    if (r.sog && (!std::isfinite(*r.sog) || *r.sog < 0.0)) return RejectReason::MalformedField;
    if (r.cog && (!std::isfinite(*r.cog) || *r.cog < 0.0 || *r.cog >= 360.0)) {
        return RejectReason::MalformedField;
    }
    return std::nullopt;
}

}  // namespace habit
