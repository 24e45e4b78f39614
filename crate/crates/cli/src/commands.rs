use std::fmt::Write as _;

use rayon::prelude::*;

use o2sim_core::angular_momentum::make_grid;
use o2sim_core::dynamics::{angular_distribution, project_image};
use o2sim_core::molecule::{manifold_spectra, manifold_spectrum, raman_shift};
use o2sim_core::observables::raman_weights;
use o2sim_core::scan::{ps_to_ns, run_scan, ScanSpec};

use crate::cli::{moment_method, DistributionArgs, LevelsArgs, RamanArgs, ReproduceArgs, ScanArgs};
use crate::error::CliError;
use crate::output::{distribution_csv, emit, real, scan_csv, write_file};
use crate::{parse, reproduce};

pub fn levels(args: &LevelsArgs) -> Result<(), CliError> {
    let constants = match &args.constants {
        Some(p) => o2sim_core::MolecularConstants::from_json_file(p)?,
        None => o2sim_core::MolecularConstants::oxygen(),
    };
    let spectrum = manifold_spectrum(args.n, args.b_field, &constants)?;
    let mut out = String::from("n,J_label,m_j,energy_ghz\n");
    for (j, m, e) in spectrum.levels() {
        writeln!(out, "{},{j},{m},{}", args.n, real(e)).expect("writing to a String");
    }
    emit(args.out.as_deref(), out.as_bytes())
}

pub fn distribution(args: &DistributionArgs) -> Result<(), CliError> {
    let (n_theta, n_phi) = parse::grid(&args.grid)?;
    let images = args
        .image
        .iter()
        .map(|s| parse::image_target(s))
        .collect::<Result<Vec<_>, _>>()?;
    if args.image_size == 0 {
        return Err(CliError::Usage("image size must be positive".into()));
    }
    let model = args.model.model()?;
    let grid = make_grid(n_theta, n_phi)?;
    let spectrum = model.spectrum(args.n, args.b_field)?;
    let packet = model.packet(&spectrum, args.time)?;
    let field = angular_distribution(&packet, &grid)?;

    let csv = distribution_csv(&field);
    emit(args.out.as_deref(), csv.as_bytes())?;
    for (axis, path) in images {
        write_file(
            &path,
            &project_image(&field, axis, args.image_size).to_pgm(),
        )?;
    }
    Ok(())
}

pub fn scan(args: &ScanArgs) -> Result<(), CliError> {
    let spec = ScanSpec {
        n_list: parse::n_list(&args.n)?,
        b_list: parse::real_list(&args.b_field, "B")?,
        t_list_ps: parse::time_list_ps(&args.time)?,
        theta_p_list: parse::angle_list(&args.theta_p)?,
        pressure_atm: args.pressure,
        model: args.model.model()?,
        grid: parse::grid(&args.grid)?,
        moments: moment_method(args.moments),
    };
    let rows = run_scan(&spec, args.workers)?;
    emit(args.out.as_deref(), scan_csv(&rows).as_bytes())
}

pub fn raman(args: &RamanArgs) -> Result<(), CliError> {
    let n_list = parse::n_list(&args.n)?;
    let b_list = parse::real_list(&args.b_field, "B")?;
    let t_list = parse::time_list_ps(&args.time)?;
    let model = args.model.model()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.workers)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let lines = pool.install(|| -> Result<Vec<String>, CliError> {
        let spectra = n_list
            .par_iter()
            .map(|&n| manifold_spectra(n, &b_list, &model.constants))
            .collect::<Result<Vec<_>, _>>()?;
        let t_list = &t_list;
        let n_b = b_list.len();
        let tuples: Vec<(usize, usize, u64)> = (0..n_list.len())
            .flat_map(|ni| (0..n_b).flat_map(move |bi| t_list.iter().map(move |&t| (ni, bi, t))))
            .collect();
        tuples
            .par_iter()
            .map(|&(ni, bi, t_ps)| {
                let spectrum = &spectra[ni][bi];
                let t_ns = ps_to_ns(t_ps);
                let w = raman_weights(&model.packet(spectrum, t_ns)?);
                Ok(format!(
                    "{},{},{},{},{},{},{}\n",
                    spectrum.n,
                    real(spectrum.b_field),
                    real(t_ns),
                    real(raman_shift(spectrum.n, &model.constants)),
                    real(w.w_plus),
                    real(w.w_zero),
                    real(w.w_minus)
                ))
            })
            .collect()
    })?;
    let mut out = String::from("n,b_tesla,t_ns,raman_shift_thz,w_plus,w_zero,w_minus\n");
    lines.iter().for_each(|l| out.push_str(l));
    emit(args.out.as_deref(), out.as_bytes())
}

pub fn reproduce(args: &ReproduceArgs) -> Result<(), CliError> {
    let figure = reproduce::Figure::from_id(&args.figure)?;
    let model = args.model.model()?;
    let run = reproduce::run(figure, &model, args.workers)?;
    std::fs::create_dir_all(&args.out)
        .map_err(|e| CliError::Io(format!("{}: {e}", args.out.display())))?;
    for (name, bytes) in &run.files {
        write_file(&args.out.join(name), bytes)?;
    }
    let summary = serde_json::to_string_pretty(&run.report).expect("report serializes");
    write_file(
        &args.out.join(format!("{}_summary.json", figure.id())),
        summary.as_bytes(),
    )?;
    print!("{}", run.report.human_summary());
    Ok(())
}
