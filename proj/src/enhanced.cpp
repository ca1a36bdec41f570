#include <algorithm>
#include <optional>
#include <vector>

#include "cakecut/errors.hpp"
#include "cakecut/protocols.hpp"

namespace cakecut {

namespace {

// Lowest index among the smallest values.
std::size_t arg_min(const std::vector<Rational>& xs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] < xs[best]) best = i;
  }
  return best;
}

// Largest value; on a tie avoid `avoid` if possible, then lowest index.
std::size_t arg_max(const std::vector<Rational>& xs, std::optional<std::size_t> avoid = std::nullopt) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!best || xs[*best] < xs[i]) {
      best = i;
    } else if (xs[i] == xs[*best] && avoid && *best == *avoid) {
      best = i;
    }
  }
  return *best;
}

// Index of the runner-up value when the extreme at `top` is strict.
std::optional<std::size_t> strict_runner_up(const std::vector<Rational>& xs, std::size_t top, bool largest) {
  std::optional<std::size_t> second;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == top) continue;
    if (xs[i] == xs[top]) return std::nullopt;
    if (!second || (largest ? xs[*second] < xs[i] : xs[i] < xs[*second])) second = i;
  }
  return second;
}

[[noreturn]] void blame(Mediator& m, std::initializer_list<int> suspects, const std::string& step,
                        const std::string& what) {
  for (int p : suspects) {
    if (!m.truthful(p)) throw ProtocolViolation(p, step, what);
  }
  throw InternalError(what + " at step " + step);
}

struct RightExit {
  int player;
  Rational cut;
};

// Steps 9.1 to 9.3 (or 1 to 3 of the four-player protocol): the smallest
// right piece leaves. With `strong`, the exit edge moves halfway towards the
// runner-up mark so the leaver gets strictly more than it asked for.
RightExit right_exit(Mediator& m, const std::vector<int>& players, const PieceSet& cake, bool strong,
                     const std::string& mark_step, const std::string& pick_step, const std::string& assign_step) {
  m.count_step(mark_step);
  std::vector<Rational> marks;
  for (int p : players) marks.push_back(m.mark_share_left(p, mark_step, cake, cake.hi(), Rational(1, 4)));
  m.count_step(pick_step);
  const std::size_t j = arg_max(marks);
  Rational cut = marks[j];
  if (strong) {
    if (const auto k = strict_runner_up(marks, j, true)) {
      cut = marks[*k] + (marks[j] - marks[*k]) / Rational(2);
    } else {
      m.note_fallback(pick_step);
    }
  }
  m.count_step(assign_step);
  m.give(players[j], cake.clip(cut, cake.hi()));
  m.trace(assign_step, players[j], "leaves with the right end", {{"mark", marks[j]}, {"edge", cut}});
  return {players[j], cut};
}

}  // namespace

void run_enhanced_four(Mediator& m, bool strong_fair) {
  std::vector<int> players{0, 1, 2, 3};
  const PieceSet cake = PieceSet::whole();
  const auto exit = right_exit(m, players, cake, strong_fair, "1", "2", "3");
  std::erase(players, exit.player);
  selfridge_conway_on(m, {players[0], players[1], players[2]}, cake.clip(cake.lo(), exit.cut));
}

void run_enhanced_general(Mediator& m, bool strong_fair) {
  const int n = m.player_count();
  std::vector<int> players;
  for (int i = 0; i < n; ++i) players.push_back(i);
  PieceSet cake = PieceSet::whole();

  for (int t = 1; players.size() > 4; ++t) {
    const int s = static_cast<int>(players.size());
    const Rational share(1, s);
    m.audit_share(players, cake, Rational(s, n));
    OuterRound round;
    round.t = t;
    round.s = s;
    round.subcake = cake;
    const bool strong = strong_fair && t == 1;

    m.count_step("1");
    std::vector<Rational> lambdas, rhos;
    for (int p : players) {
      lambdas.push_back(m.mark_share_right(p, "1", cake, share));
      rhos.push_back(m.mark_share_left(p, "1", cake, cake.hi(), share));
    }

    m.count_step("2");
    const std::size_t j = arg_min(lambdas);
    Rational left_edge = lambdas[j];
    if (strong) {
      if (const auto l = strict_runner_up(lambdas, j, false)) {
        left_edge = lambdas[j] + (lambdas[*l] - lambdas[j]) / Rational(2);
      } else {
        m.note_fallback("2");
      }
    }

    m.count_step("3");
    std::size_t k = arg_max(rhos, j);
    Rational rho_prime = cake.hi();
    int inner = 0;
    while (k == j) {
      if (++inner > s - 2) {
        blame(m, {players[j]}, "4.3", "inner loop exceeded " + std::to_string(s - 2) + " iterations");
      }
      m.count_step("4.1");
      rho_prime = rhos[k];
      m.count_step("4.2");
      for (std::size_t i = 0; i < players.size(); ++i) {
        rhos[i] = m.mark_share_left(players[i], "4.2", cake, rho_prime, share);
      }
      m.count_step("4.3");
      k = arg_max(rhos, j);
      m.trace("4.3", -1, "inner loop", {{"rho'", rho_prime}, {"rho_k", rhos[k]}});
    }
    const std::string right_step = inner > 0 ? "4.3" : "3";
    Rational right_edge = rhos[k];
    if (strong) {
      if (const auto r = strict_runner_up(rhos, k, true)) {
        right_edge = rhos[k] - (rhos[k] - rhos[*r]) / Rational(2);
      } else {
        m.note_fallback(right_step);
      }
    }
    if (right_edge < left_edge && (left_edge != lambdas[j] || right_edge != rhos[k])) {
      // the widened pieces would overlap; keep the plain exits instead
      left_edge = lambdas[j];
      right_edge = rhos[k];
      m.note_fallback(right_step);
    }
    if (right_edge < left_edge) {
      blame(m, {players[j], players[k]}, right_step, "left and right exit pieces overlap");
    }

    m.count_step("5");
    const PieceSet left_piece = cake.clip(cake.lo(), left_edge);
    m.count_step("6");
    const PieceSet right_piece = cake.clip(right_edge, rho_prime);
    if (left_piece.empty()) blame(m, {players[j]}, "5", "left exit piece is empty");
    if (right_piece.empty()) blame(m, {players[k]}, "6", "right exit piece is empty");
    m.give(players[j], left_piece);
    m.give(players[k], right_piece);

    m.count_step("7");
    round.lambda = left_edge;
    round.rho = right_edge;
    round.rho_prime = rho_prime;
    round.left_exit = players[j];
    round.right_exit = players[k];
    round.inner_iterations = inner;
    m.trace("7", -1, "round " + std::to_string(t) + " exits p" + std::to_string(players[j] + 1) + " and p" +
                         std::to_string(players[k] + 1),
            {{"lambda", left_edge}, {"rho", right_edge}, {"rho'", rho_prime}, {"s", Rational(s)}});
    const int pj = players[j], pk = players[k];
    std::erase(players, pj);
    std::erase(players, pk);

    m.count_step("8");
    cake = cake.minus(left_piece).minus(right_piece);
    m.note_round(std::move(round));
  }

  if (players.size() == 4) {
    m.audit_share(players, cake, Rational(4, n));
    const bool strong = strong_fair && n == 4;
    m.count_step("9.4");
    const auto exit = right_exit(m, players, cake, strong, "9.1", "9.2", "9.3");
    std::erase(players, exit.player);
    cake = cake.clip(cake.lo(), exit.cut);
  }
  m.audit_share(players, cake, Rational(3, n));
  selfridge_conway_on(m, {players[0], players[1], players[2]}, cake, n == 3 ? "" : "10.");
}

}  // namespace cakecut
