#include "asda/experiment.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "asda/simulator.hpp"

namespace asda {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN ();

std::string_view
trim (std::string_view s)
{
  const auto first = s.find_first_not_of (" \t\r\n");
  if (first == std::string_view::npos)
    {
      return {};
    }
  const auto last = s.find_last_not_of (" \t\r\n");
  return s.substr (first, last - first + 1);
}

std::vector<std::string_view>
split (std::string_view s, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true)
    {
      const auto pos = s.find (sep, start);
      out.push_back (s.substr (start, pos == std::string_view::npos ? pos : pos - start));
      if (pos == std::string_view::npos)
        {
          return out;
        }
      start = pos + 1;
    }
}

double
to_double (std::string_view key, std::string_view text)
{
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars (text.data (), text.data () + text.size (), v);
  if (ec != std::errc () || ptr != text.data () + text.size () || !std::isfinite (v))
    {
      throw ConfigError (std::string (key) + ": expected a number, got '" + std::string (text)
                         + "'");
    }
  return v;
}

std::uint64_t
to_u64 (std::string_view key, std::string_view text)
{
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars (text.data (), text.data () + text.size (), v);
  if (ec != std::errc () || ptr != text.data () + text.size ())
    {
      throw ConfigError (std::string (key) + ": expected a non-negative integer, got '"
                         + std::string (text) + "'");
    }
  return v;
}

std::uint32_t
to_u32 (std::string_view key, std::string_view text)
{
  const std::uint64_t v = to_u64 (key, text);
  if (v > std::numeric_limits<std::uint32_t>::max ())
    {
      throw ConfigError (std::string (key) + ": value out of range");
    }
  return static_cast<std::uint32_t> (v);
}

bool
to_bool (std::string_view key, std::string_view text)
{
  if (text == "true" || text == "on" || text == "1" || text == "yes")
    {
      return true;
    }
  if (text == "false" || text == "off" || text == "0" || text == "no")
    {
      return false;
    }
  throw ConfigError (std::string (key) + ": expected true or false, got '" + std::string (text)
                     + "'");
}

template <typename T>
T
to_enum (std::string_view key, std::string_view text, std::optional<T> parsed)
{
  if (!parsed)
    {
      throw ConfigError (std::string (key) + ": unrecognized value '" + std::string (text) + "'");
    }
  return *parsed;
}

using Setter = std::function<void (SimConfig &, std::string_view, std::string_view)>;

const std::map<std::string, Setter, std::less<>> &
setters ()
{
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> t;
    auto num = [&t] (const char *name, double SimConfig::*field) {
      t[name] = [field] (SimConfig &c, std::string_view k, std::string_view v) {
        c.*field = to_double (k, v);
      };
    };
    auto u32 = [&t] (const char *name, std::uint32_t SimConfig::*field) {
      t[name] = [field] (SimConfig &c, std::string_view k, std::string_view v) {
        c.*field = to_u32 (k, v);
      };
    };
    num ("field_width_m", &SimConfig::field_width_m);
    num ("field_height_m", &SimConfig::field_height_m);
    u32 ("node_count", &SimConfig::node_count);
    u32 ("nodes", &SimConfig::node_count);
    num ("sim_time_s", &SimConfig::sim_time_s);
    u32 ("duty_cycle_slots", &SimConfig::duty_cycle_slots);
    u32 ("awake_slots", &SimConfig::awake_slots);
    num ("cycle_period_s", &SimConfig::cycle_period_s);
    num ("transmission_range_m", &SimConfig::transmission_range_m);
    u32 ("packet_size_bytes", &SimConfig::packet_size_bytes);
    u32 ("control_frame_bytes", &SimConfig::control_frame_bytes);
    u32 ("syn_frame_bytes", &SimConfig::syn_frame_bytes);
    num ("initial_energy_j", &SimConfig::initial_energy_j);
    num ("misbehaving_ratio", &SimConfig::misbehaving_ratio);
    num ("attack_interval_s", &SimConfig::attack_interval_s);
    num ("link_delay_s", &SimConfig::link_delay_s);
    u32 ("rsa_prime_bits", &SimConfig::rsa_prime_bits);
    t["attack_kind"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      c.attack_kind = to_enum (k, v, parse_attack_kind (v));
    };
    t["election_score"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      c.election_score = to_enum (k, v, parse_score_rule (v));
    };
    t["sleep_update"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      c.sleep_update = to_enum (k, v, parse_sleep_update_rule (v));
    };
    t["defense_enabled"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      c.defense_enabled = to_bool (k, v);
    };
    t["rng_seed"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      c.rng_seed = to_u64 (k, v);
    };
    t["rsa_public_exponent"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      c.rsa_public_exponent = to_u64 (k, v);
    };
    t["base_station_x"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      Position p = c.sink_position ();
      p.x = to_double (k, v);
      c.base_station_position = p;
    };
    t["base_station_y"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      Position p = c.sink_position ();
      p.y = to_double (k, v);
      c.base_station_position = p;
    };
    auto radio = [&t] (const char *name, double RadioParams::*field) {
      t[name] = [field] (SimConfig &c, std::string_view k, std::string_view v) {
        c.radio.*field = to_double (k, v);
      };
    };
    radio ("e_elec", &RadioParams::e_elec);
    radio ("eps_fs", &RadioParams::eps_fs);
    radio ("eps_mp", &RadioParams::eps_mp);
    radio ("eda", &RadioParams::eda);
    radio ("sensing_energy_j", &RadioParams::sensing_energy_j);
    auto power = [&t] (const char *name, double PowerProfile::*field) {
      t[name] = [field] (SimConfig &c, std::string_view k, std::string_view v) {
        c.power.*field = to_double (k, v);
      };
    };
    power ("idle_w", &PowerProfile::idle_w);
    power ("rx_w", &PowerProfile::rx_w);
    power ("tx_w", &PowerProfile::tx_w);
    power ("sleep_w", &PowerProfile::sleep_w);
    t["syn_rate_threshold"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      c.defense.syn_rate_threshold = to_double (k, v);
    };
    t["auth_mode_exit_factor"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      c.defense.auth_mode_exit_factor = to_double (k, v);
    };
    t["fs_rounds"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      c.defense.fs_rounds = to_u32 (k, v);
    };
    t["token_bytes"] = [] (SimConfig &c, std::string_view k, std::string_view v) {
      c.defense.token_bytes = to_u32 (k, v);
    };
    return t;
  }();
  return table;
}

std::string
format_number (double v)
{
  if (std::isnan (v))
    {
      return "nan";
    }
  char buf[64];
  std::snprintf (buf, sizeof buf, "%.6f", v);
  return buf;
}

double
metric_or_nan (const std::function<double ()> &f)
{
  try
    {
      return f ();
    }
  catch (const MetricError &)
    {
      return kNaN;
    }
}

double
parse_field (std::string_view text)
{
  if (text == "nan")
    {
      return kNaN;
    }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars (text.data (), text.data () + text.size (), v);
  if (ec != std::errc () || ptr != text.data () + text.size ())
    {
      throw std::invalid_argument ("csv: bad number '" + std::string (text) + "'");
    }
  return v;
}

void
write_text (const std::filesystem::path &path, const std::string &text)
{
  std::ofstream out (path, std::ios::binary | std::ios::trunc);
  if (!out)
    {
      throw std::runtime_error ("cannot open " + path.string () + " for writing");
    }
  out << text;
  out.flush ();
  if (!out)
    {
      throw std::runtime_error ("failed writing " + path.string ());
    }
}

} // namespace

std::string_view
to_string (SweepAxis axis)
{
  switch (axis)
    {
    case SweepAxis::NodeCount:
      return "node_count";
    case SweepAxis::MisbehavingRatio:
      return "misbehaving_ratio";
    case SweepAxis::SimTime:
      return "sim_time";
    case SweepAxis::AttackInterval:
      return "attack_interval";
    }
  return "unknown";
}

std::optional<SweepAxis>
parse_axis (std::string_view text)
{
  for (SweepAxis a : {SweepAxis::NodeCount, SweepAxis::MisbehavingRatio, SweepAxis::SimTime,
                      SweepAxis::AttackInterval})
    {
      if (text == to_string (a))
        {
          return a;
        }
    }
  return std::nullopt;
}

void
apply_axis (SimConfig &config, SweepAxis axis, double value)
{
  switch (axis)
    {
    case SweepAxis::NodeCount:
      if (value < 0.0 || value != std::floor (value))
        {
          throw ConfigError ("node_count: sweep values must be non-negative integers");
        }
      config.node_count = static_cast<std::uint32_t> (value);
      break;
    case SweepAxis::MisbehavingRatio:
      config.misbehaving_ratio = value;
      break;
    case SweepAxis::SimTime:
      config.sim_time_s = value;
      break;
    case SweepAxis::AttackInterval:
      config.attack_interval_s = value;
      break;
    }
}

void
SweepSpec::validate () const
{
  if (values.empty ())
    {
      throw ConfigError ("values: sweep needs at least one value");
    }
  for (std::size_t i = 1; i < values.size (); ++i)
    {
      if (!(values[i] > values[i - 1]))
        {
          throw ConfigError ("values: sweep values must be strictly increasing");
        }
    }
  if (replications == 0)
    {
      throw ConfigError ("replications: must be at least 1");
    }
  for (double v : values)
    {
      SimConfig c = base;
      apply_axis (c, axis, v);
      asda::validate (c);
    }
}

std::vector<double>
default_ratio_grid ()
{
  return {0.0, 0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75};
}

std::optional<SweepSpec>
scenario (std::string_view name)
{
  SweepSpec s;
  if (name == "ratio")
    {
      s.axis = SweepAxis::MisbehavingRatio;
      s.values = default_ratio_grid ();
      s.replications = 10;
    }
  else if (name == "nodes")
    {
      s.axis = SweepAxis::NodeCount;
      s.values = {50, 100, 150, 200, 250, 300};
      s.base.misbehaving_ratio = 0.15;
    }
  else if (name == "time")
    {
      s.axis = SweepAxis::SimTime;
      s.values = {10, 20, 30, 40, 50, 60, 70};
      s.base.misbehaving_ratio = 0.15;
    }
  else if (name == "interval")
    {
      s.axis = SweepAxis::AttackInterval;
      s.values = {1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
      s.base.misbehaving_ratio = 0.15;
    }
  else if (name == "baseline")
    {
      s.axis = SweepAxis::MisbehavingRatio;
      s.values = {0.0};
    }
  else
    {
      return std::nullopt;
    }
  return s;
}

void
set_config_value (SimConfig &config, std::string_view key, std::string_view value)
{
  const auto &t = setters ();
  auto it = t.find (key);
  if (it == t.end ())
    {
      throw ConfigError (std::string (key) + ": unknown key");
    }
  it->second (config, key, value);
}

ConfigFile
parse_config_text (std::string_view text)
{
  ConfigFile out;
  std::map<std::string, std::size_t> key_lines;
  std::optional<SweepAxis> axis;
  std::vector<double> values;
  std::optional<std::uint32_t> replications;
  std::size_t axis_line = 0;

  std::size_t line_no = 0;
  for (std::string_view raw : split (text, '\n'))
    {
      ++line_no;
      std::string_view line = raw.substr (0, raw.find ('#'));
      line = trim (line);
      if (line.empty ())
        {
          continue;
        }
      const auto eq = line.find ('=');
      const std::string prefix = "line " + std::to_string (line_no) + ": ";
      if (eq == std::string_view::npos)
        {
          throw ConfigError (prefix + std::string (line) + ": expected key = value");
        }
      const std::string_view key = trim (line.substr (0, eq));
      const std::string_view value = trim (line.substr (eq + 1));
      try
        {
          if (key == "axis")
            {
              axis = parse_axis (value);
              if (!axis)
                {
                  throw ConfigError ("axis: unrecognized value '" + std::string (value) + "'");
                }
              axis_line = line_no;
            }
          else if (key == "values")
            {
              values.clear ();
              for (std::string_view v : split (value, ','))
                {
                  values.push_back (to_double (key, trim (v)));
                }
            }
          else if (key == "replications")
            {
              replications = to_u32 (key, value);
            }
          else
            {
              set_config_value (out.config, key, value);
            }
        }
      catch (const ConfigError &e)
        {
          throw ConfigError (prefix + e.what ());
        }
      key_lines[std::string (key == "nodes" ? "node_count" : key)] = line_no;
    }

  try
    {
      validate (out.config);
    }
  catch (const ConfigError &e)
    {
      const std::string msg = e.what ();
      const std::string key = msg.substr (0, msg.find (':'));
      auto it = key_lines.find (key);
      if (it != key_lines.end ())
        {
          throw ConfigError ("line " + std::to_string (it->second) + ": " + msg);
        }
      throw;
    }

  if (axis)
    {
      SweepSpec s;
      s.axis = *axis;
      s.values = values;
      s.replications = replications.value_or (1);
      s.base = out.config;
      try
        {
          s.validate ();
        }
      catch (const ConfigError &e)
        {
          throw ConfigError ("line " + std::to_string (axis_line) + ": " + e.what ());
        }
      out.sweep = std::move (s);
    }
  else if (!values.empty () || replications)
    {
      throw ConfigError ("axis: required when values or replications are given");
    }
  return out;
}

ConfigFile
parse_config (const std::filesystem::path &path)
{
  std::ifstream in (path, std::ios::binary);
  if (!in)
    {
      throw ConfigError (path.string () + ": cannot open config file");
    }
  std::ostringstream ss;
  ss << in.rdbuf ();
  try
    {
      return parse_config_text (ss.str ());
    }
  catch (const ConfigError &e)
    {
      throw ConfigError (path.string () + ": " + e.what ());
    }
}

std::optional<DefenseSelection>
parse_defense_selection (std::string_view text)
{
  if (text == "on")
    {
      return DefenseSelection::On;
    }
  if (text == "off")
    {
      return DefenseSelection::Off;
    }
  if (text == "both")
    {
      return DefenseSelection::Both;
    }
  return std::nullopt;
}

ResultRow
make_row (std::string_view axis, double value, std::uint64_t seed, bool defense,
          const RunMetrics &m)
{
  ResultRow r;
  r.axis = std::string (axis);
  r.value = value;
  r.seed = seed;
  r.defense = defense;
  r.throughput_kbps = metric_or_nan ([&] { return throughput_kbps (m); });
  r.pdr_pct = metric_or_nan ([&] { return pdr_percent (m); });
  r.lifetime_s = network_lifetime (m);
  r.residual_pct = residual_energy_percent (m);
  const DetectionMetrics d = detection_metrics (m.confusion);
  r.dr_pct = d.dr;
  r.tpr_pct = d.tpr;
  r.tnr_pct = d.tnr;
  r.fpr_pct = d.fpr;
  r.fnr_pct = d.fnr;
  return r;
}

std::vector<ResultRow>
run_sweep (const SweepSpec &spec, DefenseSelection defense, unsigned jobs)
{
  spec.validate ();
  struct Cell
  {
    double value;
    std::uint64_t seed;
    bool defense;
  };
  std::vector<Cell> cells;
  std::vector<bool> flags;
  if (defense != DefenseSelection::Off)
    {
      flags.push_back (true);
    }
  if (defense != DefenseSelection::On)
    {
      flags.push_back (false);
    }
  for (double v : spec.values)
    {
      for (std::uint32_t r = 0; r < spec.replications; ++r)
        {
          for (bool f : flags)
            {
              cells.push_back ({v, spec.base.rng_seed + r, f});
            }
        }
    }

  const std::string axis (to_string (spec.axis));
  std::vector<ResultRow> rows (cells.size ());
  std::vector<std::exception_ptr> errors (cells.size ());
  auto run_cell = [&] (std::size_t i) {
    try
      {
        SimConfig c = spec.base;
        apply_axis (c, spec.axis, cells[i].value);
        c.rng_seed = cells[i].seed;
        c.defense_enabled = cells[i].defense;
        rows[i] = make_row (axis, cells[i].value, cells[i].seed, cells[i].defense, run (c));
      }
    catch (...)
      {
        errors[i] = std::current_exception ();
      }
  };

  jobs = std::max (1u, std::min<unsigned> (jobs, static_cast<unsigned> (cells.size ())));
  if (jobs <= 1)
    {
      for (std::size_t i = 0; i < cells.size (); ++i)
        {
          run_cell (i);
          if (errors[i])
            {
              break;
            }
        }
    }
  else
    {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> workers;
      for (unsigned w = 0; w < jobs; ++w)
        {
          workers.emplace_back ([&] {
            for (std::size_t i = next++; i < cells.size (); i = next++)
              {
                run_cell (i);
              }
          });
        }
      for (auto &w : workers)
        {
          w.join ();
        }
    }

  for (std::size_t i = 0; i < cells.size (); ++i)
    {
      if (!errors[i])
        {
          continue;
        }
      std::string what = "unknown error";
      try
        {
          std::rethrow_exception (errors[i]);
        }
      catch (const std::exception &e)
        {
          what = e.what ();
        }
      catch (...)
        {
        }
      throw CellError (axis + "=" + format_number (cells[i].value) + " seed="
                       + std::to_string (cells[i].seed)
                       + " defense=" + (cells[i].defense ? "on" : "off") + ": " + what);
    }
  return rows;
}

std::string
format_csv (const std::vector<ResultRow> &rows)
{
  std::string out (kCsvHeader);
  out += '\n';
  for (const ResultRow &r : rows)
    {
      out += r.axis;
      for (const std::string &f :
           {format_number (r.value), std::to_string (r.seed), std::string (r.defense ? "on" : "off"),
            format_number (r.throughput_kbps), format_number (r.pdr_pct),
            format_number (r.lifetime_s), format_number (r.residual_pct), format_number (r.dr_pct),
            format_number (r.tpr_pct), format_number (r.tnr_pct), format_number (r.fpr_pct),
            format_number (r.fnr_pct)})
        {
          out += ',';
          out += f;
        }
      out += '\n';
    }
  return out;
}

void
write_csv (const std::vector<ResultRow> &rows, const std::filesystem::path &path)
{
  write_text (path, format_csv (rows));
}

std::vector<ResultRow>
parse_csv (std::string_view text)
{
  auto lines = split (text, '\n');
  if (lines.empty () || trim (lines.front ()) != kCsvHeader)
    {
      throw std::invalid_argument ("csv: missing or unexpected header");
    }
  std::vector<ResultRow> rows;
  for (std::size_t i = 1; i < lines.size (); ++i)
    {
      const std::string_view line = trim (lines[i]);
      if (line.empty ())
        {
          continue;
        }
      const auto f = split (line, ',');
      if (f.size () != 13)
        {
          throw std::invalid_argument ("csv: line " + std::to_string (i + 1)
                                       + ": expected 13 fields");
        }
      ResultRow r;
      r.axis = std::string (f[0]);
      r.value = parse_field (f[1]);
      std::uint64_t seed = 0;
      const auto [ptr, ec] = std::from_chars (f[2].data (), f[2].data () + f[2].size (), seed);
      if (ec != std::errc () || ptr != f[2].data () + f[2].size ())
        {
          throw std::invalid_argument ("csv: bad seed '" + std::string (f[2]) + "'");
        }
      r.seed = seed;
      if (f[3] != "on" && f[3] != "off")
        {
          throw std::invalid_argument ("csv: bad defense flag '" + std::string (f[3]) + "'");
        }
      r.defense = f[3] == "on";
      r.throughput_kbps = parse_field (f[4]);
      r.pdr_pct = parse_field (f[5]);
      r.lifetime_s = parse_field (f[6]);
      r.residual_pct = parse_field (f[7]);
      r.dr_pct = parse_field (f[8]);
      r.tpr_pct = parse_field (f[9]);
      r.tnr_pct = parse_field (f[10]);
      r.fpr_pct = parse_field (f[11]);
      r.fnr_pct = parse_field (f[12]);
      rows.push_back (std::move (r));
    }
  return rows;
}

std::vector<ResultRow>
read_csv (const std::filesystem::path &path)
{
  std::ifstream in (path, std::ios::binary);
  if (!in)
    {
      throw std::runtime_error ("cannot open " + path.string ());
    }
  std::ostringstream ss;
  ss << in.rdbuf ();
  return parse_csv (ss.str ());
}

std::vector<SummaryRow>
summarize (const std::vector<ResultRow> &rows)
{
  struct Acc
  {
    SummaryRow row;
    std::array<double, 9> sum{};
    std::array<std::uint32_t, 9> count{};
  };
  std::vector<Acc> groups;
  for (const ResultRow &r : rows)
    {
      auto it = std::find_if (groups.begin (), groups.end (), [&] (const Acc &a) {
        return a.row.axis == r.axis && a.row.value == r.value && a.row.defense == r.defense;
      });
      if (it == groups.end ())
        {
          Acc a;
          a.row.axis = r.axis;
          a.row.value = r.value;
          a.row.defense = r.defense;
          groups.push_back (a);
          it = groups.end () - 1;
        }
      ++it->row.runs;
      const std::array<double, 9> v{r.throughput_kbps, r.pdr_pct, r.lifetime_s,
                                    r.residual_pct,    r.dr_pct,  r.tpr_pct,
                                    r.tnr_pct,         r.fpr_pct, r.fnr_pct};
      for (std::size_t k = 0; k < v.size (); ++k)
        {
          if (!std::isnan (v[k]))
            {
              it->sum[k] += v[k];
              ++it->count[k];
            }
        }
    }
  std::vector<SummaryRow> out;
  for (Acc &a : groups)
    {
      std::array<double, 9> mean{};
      for (std::size_t k = 0; k < mean.size (); ++k)
        {
          mean[k] = a.count[k] == 0 ? kNaN : a.sum[k] / a.count[k];
        }
      SummaryRow s = a.row;
      s.throughput_kbps = mean[0];
      s.pdr_pct = mean[1];
      s.lifetime_s = mean[2];
      s.residual_pct = mean[3];
      s.dr_pct = mean[4];
      s.tpr_pct = mean[5];
      s.tnr_pct = mean[6];
      s.fpr_pct = mean[7];
      s.fnr_pct = mean[8];
      out.push_back (s);
    }
  return out;
}

std::string
format_summary_csv (const std::vector<SummaryRow> &rows)
{
  std::string out = "axis,value,defense,runs,throughput_kbps,pdr_pct,lifetime_s,residual_pct,"
                    "dr_pct,tpr_pct,tnr_pct,fpr_pct,fnr_pct\n";
  for (const SummaryRow &r : rows)
    {
      out += r.axis;
      for (const std::string &f :
           {format_number (r.value), std::string (r.defense ? "on" : "off"),
            std::to_string (r.runs), format_number (r.throughput_kbps), format_number (r.pdr_pct),
            format_number (r.lifetime_s), format_number (r.residual_pct), format_number (r.dr_pct),
            format_number (r.tpr_pct), format_number (r.tnr_pct), format_number (r.fpr_pct),
            format_number (r.fnr_pct)})
        {
          out += ',';
          out += f;
        }
      out += '\n';
    }
  return out;
}

void
write_summary_csv (const std::vector<SummaryRow> &rows, const std::filesystem::path &path)
{
  write_text (path, format_summary_csv (rows));
}

std::filesystem::path
summary_path (const std::filesystem::path &csv_path)
{
  std::filesystem::path p = csv_path;
  p.replace_filename (csv_path.stem ().string () + "_summary" + csv_path.extension ().string ());
  return p;
}

} // namespace asda
