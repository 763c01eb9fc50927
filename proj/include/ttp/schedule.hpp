#ifndef TTP_SCHEDULE_HPP
#define TTP_SCHEDULE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ttp/instance.hpp"

namespace ttp {

enum class Venue : unsigned char { home, away };

struct Game {
  int opponent = -1;
  Venue venue = Venue::home;
};

// Double round-robin table, team-major: entry(t, d) is team t's game on day d.
class Schedule {
 public:
  Schedule() = default;
  Schedule(int n_teams, int n_days) : n_(n_teams), days_(n_days), table_(n_teams, std::vector<Game>(n_days)) {}

  int n() const { return n_; }
  int days() const { return days_; }
  const Game& at(int team, int day) const { return table_[team][day]; }

  void set_game(int day, int away_team, int home_team) {
    table_[away_team][day] = {home_team, Venue::away};
    table_[home_team][day] = {away_team, Venue::home};
  }

  bool filled() const;

 private:
  int n_ = 0;
  int days_ = 0;
  std::vector<std::vector<Game>> table_;
};

struct Violation {
  std::string constraint;  // "structure" | "complete" | "no-repeat" | "bounded-by-k"
  std::vector<int> teams;
  std::vector<int> days;
  std::string detail;
};

struct ValidationReport {
  bool structural_ok = false;
  bool complete_drr = false;
  bool no_repeat_ok = false;
  bool bounded_by_k_ok = false;
  std::vector<Violation> violations;
  bool ok() const { return structural_ok && complete_drr && no_repeat_ok && bounded_by_k_ok; }
};

ValidationReport validate(const Schedule& s, int k);

// A team's road trips: maximal away runs, each priced home -> venues -> home.
struct Itinerary {
  int team = -1;
  std::vector<std::vector<int>> trips;
  Weight total_distance = 0;
};

Itinerary team_itinerary(const Schedule& s, const Instance& inst, int team);
Weight total_cost(const Schedule& s, const Instance& inst);

std::string serialize_schedule(const Schedule& s, const Instance& inst, int k);
Schedule deserialize_schedule(std::istream& in);
Schedule deserialize_schedule(const std::string& text);

}  // namespace ttp

#endif
