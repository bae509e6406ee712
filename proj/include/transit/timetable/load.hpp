#pragma once

#include <filesystem>

#include "transit/timetable/types.hpp"

namespace transit {

// Reads a dataset directory containing stops.csv, routes.csv, trips.csv,
// stop_times.csv and transfers.csv. Ids must be dense and in file order.
// The returned timetable is validated and finalized.
timetable load_timetable(const std::filesystem::path& dataset_dir);

// Writes the dataset back out in the same format; load_timetable on the
// result reproduces the timetable exactly.
void save_dataset(const timetable& tt, const std::filesystem::path& dataset_dir);

}  // namespace transit
