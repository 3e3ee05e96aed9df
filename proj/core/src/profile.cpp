#include "chibound/profile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chibound {

namespace {

const __int128 kSat = (static_cast<__int128>(1) << 120);

__int128 ipow_sat(long long base, int exp)
{
    if (base <= 0)
        return base == 0 && exp > 0 ? 0 : 1;
    __int128 r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r >= kSat / base)
            return kSat;
        r *= base;
    }
    return r;
}

} // namespace

std::string int128_str(__int128 v)
{
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    return {s.rbegin(), s.rend()};
}

__int128 Formula::numerator(int omega) const
{
    __int128 p = ipow_sat(omega, power);
    __int128 r = p * coeff;
    if (r >= kSat)
        return kSat;
    return r;
}

bool Formula::count_at_most(long long count, int omega) const
{
    return static_cast<__int128>(count) * divisor <= numerator(omega);
}

bool Formula::count_less(long long count, int omega) const
{
    return static_cast<__int128>(count) * divisor < numerator(omega);
}

bool Formula::count_at_least(long long count, int omega) const
{
    return static_cast<__int128>(count) * divisor >= numerator(omega);
}

long long Formula::floor_value(int omega) const
{
    __int128 v = numerator(omega) / divisor;
    if (v > static_cast<__int128>(1) << 62)
        return 1ll << 62;
    return static_cast<long long>(v);
}

std::string Formula::describe() const
{
    std::ostringstream os;
    os << coeff;
    if (power > 0)
        os << "*w^" << power;
    if (divisor != 1)
        os << "/" << divisor;
    return os.str();
}

ThresholdProfile ThresholdProfile::desk1()
{
    ThresholdProfile p;
    p.name = "DESK1";
    p.kind = ProfileKind::Desk;
    p.s = 1;
    p.part_lower = Formula::constant(2);
    p.part_upper = Formula::constant(6);
    p.cross_cap = Formula::constant(0);
    p.l0_weight = Formula::constant(3);
    p.part_bonus = Formula::constant(2);
    p.min_value = Formula::constant(8);
    p.dense_cap = Formula::constant(1);
    p.pure_cap = Formula::constant(1);
    p.z_cap = Formula::constant(1);
    p.small_cutoff = Formula::constant(2);
    p.peel_count = Formula::constant(2);
    p.out_nbr_cap = Formula::constant(4);
    p.c_const = 2;
    p.d_const = 25;
    p.base_omega = 2;
    return p;
}

ThresholdProfile ThresholdProfile::desk2()
{
    ThresholdProfile p = desk1();
    p.name = "DESK2";
    p.s = 2;
    p.d_const = 28;
    return p;
}

ThresholdProfile ThresholdProfile::paper(int s, int c)
{
    if (s < 1 || c < 1)
        throw std::invalid_argument("paper profile needs s >= 1 and c >= 1");
    ThresholdProfile p;
    p.name = "PAPER:s=" + std::to_string(s) + ",c=" + std::to_string(c);
    p.kind = ProfileKind::Paper;
    p.s = s;
    p.part_lower = {1, s + 5, 1};
    p.part_upper = {14, s + 6, 1};
    p.cross_cap = {1, s + 3, 1};
    p.l0_weight = {7, s + 5, 1};
    p.part_bonus = {1, s + 5, 1};
    p.min_value = {28, s + 6, 1};
    p.dense_cap = {1, s + 2, 14};
    p.pure_cap = {1, s + 2, 7};
    p.z_cap = {1, s + 2, 4};
    p.small_cutoff = {s + 1, s, 1};
    p.peel_count = {1, s + 2, 1};
    p.out_nbr_cap = {1, s + 7, 1};
    p.c_const = c;
    p.d_const = (c + 1) * (s + 7) + 1;
    p.base_omega = 200;
    return p;
}

void validate_profile(const ThresholdProfile& p, int omega)
{
    auto val = [&](const Formula& f) { return f.numerator(omega) / f.divisor; };
    if (val(p.part_lower) > val(p.part_upper))
        throw std::invalid_argument("profile: partLower > partUpper at omega="
                                    + std::to_string(omega));
    __int128 lhs = p.cross_cap.numerator(omega) / p.cross_cap.divisor;
    lhs *= (omega - 1);
    if (omega >= 1 && lhs >= val(p.part_lower))
        throw std::invalid_argument("profile: crossCap*(omega-1) >= partLower at omega="
                                    + std::to_string(omega));
    for (const Formula* f : {&p.part_lower, &p.part_upper, &p.cross_cap, &p.l0_weight,
                             &p.part_bonus, &p.min_value, &p.dense_cap, &p.pure_cap, &p.z_cap,
                             &p.small_cutoff, &p.peel_count, &p.out_nbr_cap})
        if (f->coeff < 0 || f->divisor <= 0)
            throw std::invalid_argument("profile: negative coefficient or bad divisor");
}

namespace {

Formula formula_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Formula::constant(j.get<long long>());
    Formula f;
    f.coeff = j.at("coeff").get<long long>();
    f.power = j.value("power", 0);
    f.divisor = j.value("divisor", 1ll);
    return f;
}

nlohmann::json formula_to_json(const Formula& f)
{
    if (f.power == 0 && f.divisor == 1)
        return f.coeff;
    nlohmann::json j;
    j["coeff"] = f.coeff;
    j["power"] = f.power;
    j["divisor"] = f.divisor;
    return j;
}

} // namespace

nlohmann::json to_json(const ThresholdProfile& p)
{
    nlohmann::json j;
    j["kind"] = p.kind == ProfileKind::Paper ? "paper" : "desk";
    j["s"] = p.s;
    if (p.kind == ProfileKind::Paper) {
        j["c"] = p.c_const;
        return j;
    }
    j["partLower"] = formula_to_json(p.part_lower);
    j["partUpper"] = formula_to_json(p.part_upper);
    j["crossCap"] = formula_to_json(p.cross_cap);
    j["l0Weight"] = formula_to_json(p.l0_weight);
    j["partBonus"] = formula_to_json(p.part_bonus);
    j["minValue"] = formula_to_json(p.min_value);
    j["denseCap"] = formula_to_json(p.dense_cap);
    j["pureCap"] = formula_to_json(p.pure_cap);
    j["zCap"] = formula_to_json(p.z_cap);
    j["smallCutoff"] = formula_to_json(p.small_cutoff);
    j["peelCount"] = formula_to_json(p.peel_count);
    j["outNbrCap"] = formula_to_json(p.out_nbr_cap);
    j["cConst"] = p.c_const;
    j["dConst"] = p.d_const;
    j["baseOmega"] = p.base_omega;
    return j;
}

ThresholdProfile profile_from_json(const std::string& name, const nlohmann::json& j)
{
    std::string kind = j.value("kind", "desk");
    if (kind == "paper") {
        auto p = ThresholdProfile::paper(j.at("s").get<int>(), j.at("c").get<int>());
        p.name = name;
        return p;
    }
    ThresholdProfile p = ThresholdProfile::desk1();
    p.name = name;
    p.kind = ProfileKind::Desk;
    p.s = j.at("s").get<int>();
    p.part_lower = formula_from_json(j.at("partLower"));
    p.part_upper = formula_from_json(j.at("partUpper"));
    p.cross_cap = formula_from_json(j.at("crossCap"));
    p.l0_weight = formula_from_json(j.at("l0Weight"));
    p.part_bonus = formula_from_json(j.at("partBonus"));
    p.min_value = formula_from_json(j.at("minValue"));
    p.dense_cap = formula_from_json(j.at("denseCap"));
    p.pure_cap = formula_from_json(j.at("pureCap"));
    p.z_cap = formula_from_json(j.at("zCap"));
    p.small_cutoff = formula_from_json(j.at("smallCutoff"));
    p.peel_count = formula_from_json(j.at("peelCount"));
    p.out_nbr_cap = formula_from_json(j.at("outNbrCap"));
    p.c_const = j.value("cConst", 2);
    p.d_const = j.value("dConst", 25);
    p.base_omega = j.value("baseOmega", 2);
    return p;
}

ThresholdProfile resolve_profile(const std::string& name,
                                 const std::map<std::string, ThresholdProfile>& extra)
{
    if (auto it = extra.find(name); it != extra.end())
        return it->second;
    if (name == "DESK1")
        return ThresholdProfile::desk1();
    if (name == "DESK2")
        return ThresholdProfile::desk2();
    if (name.rfind("PAPER:", 0) == 0) {
        int s = -1, c = -1;
        if (std::sscanf(name.c_str(), "PAPER:s=%d,c=%d", &s, &c) == 2)
            return ThresholdProfile::paper(s, c);
        throw std::invalid_argument("bad paper profile name, expected PAPER:s=<s>,c=<c>");
    }
    throw std::invalid_argument("unknown profile: " + name);
}

std::map<std::string, ThresholdProfile> load_profiles_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open profiles file: " + path);
    nlohmann::json j;
    in >> j;
    std::map<std::string, ThresholdProfile> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.emplace(it.key(), profile_from_json(it.key(), it.value()));
    return out;
}

} // namespace chibound
