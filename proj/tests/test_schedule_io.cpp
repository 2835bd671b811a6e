#include <gtest/gtest.h>

#include "zoneroute/benchgen.hpp"
#include "zoneroute/error.hpp"
#include "zoneroute/pipeline.hpp"
#include "zoneroute/schedule_io.hpp"

using namespace zoneroute;

namespace {

nlohmann::json compiled(const char* family, std::size_t n, RoutingMode mode,
                        std::size_t aods = 1) {
  const auto c = generate({parse_family(family), n, 5});
  const Hardware hw{HardwareParams{}, default_geometry(n)};
  return schedule_to_json(compile(c, hw, {mode, aods, 0.5, false}).schedule);
}

bool has_kind(const std::vector<VerifyViolation>& v, const std::string& kind) {
  return std::any_of(v.begin(), v.end(),
                     [&](const VerifyViolation& x) { return x.kind == kind; });
}

std::vector<VerifyViolation> verify_doc(const nlohmann::json& doc) {
  return verify_schedule(schedule_from_json(doc));
}

// Swaps the destinations of two moves with distinct targets inside one
// CollMove, which reverses their order on at least one axis.
bool inject_crossing(nlohmann::json& doc) {
  for (auto& st : doc["stages"]) {
    for (auto& ch : st["chunks"]) {
      for (auto& cm : ch["collmoves"]) {
        auto& moves = cm["moves"];
        for (std::size_t i = 0; i < moves.size(); ++i) {
          for (std::size_t j = i + 1; j < moves.size(); ++j) {
            if (moves[i]["to"] != moves[j]["to"]) {
              std::swap(moves[i]["to"], moves[j]["to"]);
              return true;
            }
          }
        }
      }
    }
  }
  return false;
}

} // namespace

TEST(ScheduleIo, RoundTripIsByteIdentical) {
  for (auto mode : {RoutingMode::WithStorage, RoutingMode::NonStorage}) {
    const auto doc = compiled("qaoa-regular3", 12, mode, 2);
    EXPECT_EQ(schedule_to_json(schedule_from_json(doc)).dump(2), doc.dump(2));
  }
}

TEST(ScheduleIo, CompiledSchedulesVerify) {
  for (const char* family : {"qaoa-regular3", "bv", "vqe", "qsim", "qft"}) {
    for (auto mode : {RoutingMode::WithStorage, RoutingMode::NonStorage}) {
      for (std::size_t aods : {1u, 3u}) {
        const auto v = verify_doc(compiled(family, 10, mode, aods));
        EXPECT_TRUE(v.empty()) << family << ": " << (v.empty() ? "" : v[0].kind + " " + v[0].detail);
      }
    }
  }
}

TEST(ScheduleIo, DuplicateOccupant) {
  auto doc = compiled("bv", 8, RoutingMode::WithStorage);
  doc["initial_placement"][1] = doc["initial_placement"][0];
  EXPECT_TRUE(has_kind(verify_doc(doc), "OccupancyViolation"));
}

TEST(ScheduleIo, ConflictingPair) {
  auto doc = compiled("qaoa-regular3", 12, RoutingMode::WithStorage);
  ASSERT_TRUE(inject_crossing(doc));
  EXPECT_TRUE(has_kind(verify_doc(doc), "ConflictViolation"));
}

TEST(ScheduleIo, CounterTampering) {
  auto doc = compiled("bv", 8, RoutingMode::NonStorage);
  doc["counters"]["N_trans"] = doc["counters"]["N_trans"].get<int>() + 2;
  EXPECT_TRUE(has_kind(verify_doc(doc), "CounterViolation"));
  doc = compiled("bv", 8, RoutingMode::NonStorage);
  doc["stages"][0]["n_i"] = doc["stages"][0]["n_i"].get<int>() + 1;
  EXPECT_TRUE(has_kind(verify_doc(doc), "CounterViolation"));
}

TEST(ScheduleIo, DurationTampering) {
  auto doc = compiled("bv", 8, RoutingMode::WithStorage);
  auto& ch = doc["stages"][0]["chunks"][0];
  ch["duration_us"] = ch["duration_us"].get<double>() + 1.0;
  EXPECT_TRUE(has_kind(verify_doc(doc), "DurationViolation"));
}

TEST(ScheduleIo, StaleMove) {
  auto doc = compiled("bv", 8, RoutingMode::WithStorage);
  auto& m = doc["stages"][0]["chunks"][0]["collmoves"][0]["moves"][0];
  m["from"] = nlohmann::json{"compute", 2, 2};
  EXPECT_TRUE(has_kind(verify_doc(doc), "StaleMove"));
}

TEST(ScheduleIo, TooManyAods) {
  auto doc = compiled("qaoa-regular3", 12, RoutingMode::WithStorage, 3);
  doc["n_aods"] = 1;
  EXPECT_TRUE(has_kind(verify_doc(doc), "AodViolation"));
}

TEST(ScheduleIo, MissingGateColocation) {
  auto doc = compiled("bv", 8, RoutingMode::WithStorage);
  doc["stages"][0]["gates"].push_back({0, 7});
  EXPECT_FALSE(verify_doc(doc).empty());
}

TEST(ScheduleIo, MalformedDocuments) {
  EXPECT_THROW(schedule_from_json(nlohmann::json::object()), Error);
  auto doc = compiled("bv", 8, RoutingMode::WithStorage);
  doc["initial_placement"][0] = nlohmann::json{"attic", 0, 0};
  EXPECT_THROW(schedule_from_json(doc), Error);
  doc = compiled("bv", 8, RoutingMode::WithStorage);
  doc["mode"] = "sideways";
  EXPECT_THROW(schedule_from_json(doc), Error);
}
