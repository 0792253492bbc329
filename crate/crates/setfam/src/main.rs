fn main() {
    // Restore default SIGPIPE handling so piping into `head` ends the
    // process quietly instead of panicking on a closed stdout.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(setfam::cli::run());
}
