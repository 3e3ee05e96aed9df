#ifndef CHIBOUND_PROFILE_HPP
#define CHIBOUND_PROFILE_HPP

#include <map>
#include <string>

#include <json.hpp>

namespace chibound {

// coeff * omega^power / divisor, compared against counts by cross-multiplying
// in __int128 (saturated). All combinatorial predicates stay in exact integer
// arithmetic; no floating point.
struct Formula {
    long long coeff = 0;
    int power = 0;
    long long divisor = 1;

    static Formula constant(long long c) { return {c, 0, 1}; }

    __int128 numerator(int omega) const; // coeff * omega^power, saturated
    bool count_at_most(long long count, int omega) const;  // count <= value
    bool count_less(long long count, int omega) const;     // count <  value
    bool count_at_least(long long count, int omega) const; // count >= value
    long long floor_value(int omega) const;                // saturated
    std::string describe() const;
};

enum class ProfileKind { Desk, Paper };

// Every numeric threshold of the construction as a function of omega.
// Paper formulas only engage for omega > 200; desk profiles replace them with
// small constants so the machinery can be exercised and checked at desk scale.
//
// Field map (paper values in parentheses):
//   part_lower/part_upper  part-size window        (omega^{s+5}, 14*omega^{s+6})
//   cross_cap              non-neighbour cap across parts      (omega^{s+3})
//   l0_weight, part_bonus  value coefficients     (7*omega^{s+5}, omega^{s+5})
//   min_value              template admission threshold        (28*omega^{s+6})
//   dense_cap/pure_cap/z_cap   classification caps (omega^{s+2}/14, /7, /4)
//   small_cutoff           m                      ((s+1)*omega^s)
//   peel_count             clique-peel budget n   (omega^{s+2})
//   out_nbr_cap            forward-degree cap     (omega^{s+7})
//
// Ramsey-derived quantities (the omega^s / omega^{s+1} neighbour caps inside
// the pure-vertex arguments) are not profile fields: the Ramsey bound is
// hypothesis-free, so they are computed exactly from (omega, s).
struct ThresholdProfile {
    std::string name;
    ProfileKind kind = ProfileKind::Desk;
    int s = 1;

    Formula part_lower, part_upper, cross_cap;
    Formula l0_weight, part_bonus, min_value;
    Formula dense_cap, pure_cap, z_cap;
    Formula small_cutoff, peel_count, out_nbr_cap;

    int c_const = 2;
    int d_const = 25;
    int base_omega = 2;

    static ThresholdProfile desk1();
    static ThresholdProfile desk2();
    static ThresholdProfile paper(int s, int c);
};

// spec'd profile invariants at a given omega; throws on violation
void validate_profile(const ThresholdProfile& p, int omega);

nlohmann::json to_json(const ThresholdProfile& p);
ThresholdProfile profile_from_json(const std::string& name, const nlohmann::json& j);

// built-ins plus any profiles from an optional config file; names DESK1,
// DESK2 and the shorthand "PAPER:s=<s>,c=<c>" always resolve
ThresholdProfile resolve_profile(const std::string& name,
                                 const std::map<std::string, ThresholdProfile>& extra = {});
std::map<std::string, ThresholdProfile> load_profiles_file(const std::string& path);

std::string int128_str(__int128 v);

} // namespace chibound

#endif
