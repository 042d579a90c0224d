// asda-sim: run a parameter sweep and write per-run and summary CSVs.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "asda/experiment.hpp"

namespace {

int
fail (const char *code, const std::string &message, int status)
{
  std::string escaped;
  for (char c : message)
    {
      if (c == '"' || c == '\\')
        {
          escaped += '\\';
        }
      escaped += c == '\n' ? ' ' : c;
    }
  std::cerr << "error: code=" << code << " message=\"" << escaped << "\"\n";
  return status;
}

asda::SweepSpec
parse_sweep_flag (const std::string &text, const asda::SimConfig &base)
{
  const auto eq = text.find ('=');
  if (eq == std::string::npos)
    {
      throw asda::ConfigError ("--sweep: expected AXIS=v1,v2,...");
    }
  asda::ConfigFile parsed = asda::parse_config_text ("axis = " + text.substr (0, eq)
                                                     + "\nvalues = " + text.substr (eq + 1));
  asda::SweepSpec spec = *parsed.sweep;
  spec.base = base;
  return spec;
}

} // namespace

int
main (int argc, char **argv)
{
  CLI::App app{"Clustered sensor network simulator under denial-of-sleep attack"};
  std::string config_path;
  std::string sweep;
  std::string scenario_name;
  std::string defense = "both";
  std::string out = "results.csv";
  unsigned seeds = 0;
  unsigned jobs = 1;
  app.add_option ("--config", config_path, "key = value config file");
  app.add_option ("--sweep", sweep, "AXIS=v1,v2,... (node_count, misbehaving_ratio, sim_time, "
                                    "attack_interval)");
  app.add_option ("--scenario", scenario_name, "preset sweep: ratio, nodes, time, interval, baseline");
  app.add_option ("--seeds", seeds, "replications per axis value (seeds base, base+1, ...)");
  app.add_option ("--defense", defense, "on, off or both");
  app.add_option ("--out", out, "per-run CSV path; the summary goes next to it");
  app.add_option ("--jobs", jobs, "worker threads");

  try
    {
      app.parse (argc, argv);
    }
  catch (const CLI::CallForHelp &e)
    {
      return app.exit (e);
    }
  catch (const CLI::ParseError &e)
    {
      return fail ("usage", e.what (), 2);
    }

  asda::SweepSpec spec;
  std::optional<asda::DefenseSelection> selection;
  try
    {
      asda::ConfigFile file;
      if (!config_path.empty ())
        {
          file = asda::parse_config (config_path);
        }
      if (!sweep.empty () && !scenario_name.empty ())
        {
          return fail ("usage", "--sweep and --scenario are mutually exclusive", 2);
        }
      if (!scenario_name.empty ())
        {
          auto preset = asda::scenario (scenario_name);
          if (!preset)
            {
              return fail ("usage", "unknown scenario '" + scenario_name + "'", 2);
            }
          const double preset_ratio = preset->base.misbehaving_ratio;
          spec = *preset;
          spec.base = file.config;
          if (spec.axis != asda::SweepAxis::MisbehavingRatio && spec.base.misbehaving_ratio == 0.0)
            {
              spec.base.misbehaving_ratio = preset_ratio;
            }
        }
      else if (!sweep.empty ())
        {
          spec = parse_sweep_flag (sweep, file.config);
        }
      else if (file.sweep)
        {
          spec = *file.sweep;
        }
      else
        {
          spec.axis = asda::SweepAxis::MisbehavingRatio;
          spec.values = {file.config.misbehaving_ratio};
          spec.base = file.config;
        }
      if (seeds > 0)
        {
          spec.replications = seeds;
        }
      spec.validate ();
      selection = asda::parse_defense_selection (defense);
      if (!selection)
        {
          return fail ("usage", "--defense must be on, off or both", 2);
        }
    }
  catch (const asda::ConfigError &e)
    {
      return fail ("config", e.what (), 2);
    }

  std::vector<asda::ResultRow> rows;
  try
    {
      rows = asda::run_sweep (spec, *selection, jobs);
    }
  catch (const std::exception &e)
    {
      return fail ("run", e.what (), 1);
    }

  try
    {
      const auto parent = std::filesystem::path (out).parent_path ();
      if (!parent.empty ())
        {
          std::filesystem::create_directories (parent);
        }
      asda::write_csv (rows, out);
      asda::write_summary_csv (asda::summarize (rows), asda::summary_path (out));
    }
  catch (const std::exception &e)
    {
      return fail ("io", e.what (), 1);
    }
  std::printf ("wrote %zu rows to %s\n", rows.size (), out.c_str ());
  return 0;
}
