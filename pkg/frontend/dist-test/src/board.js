// DOM rendering of a view model.  Thin on purpose: state in, nodes out,
// handlers for the human's buttons.
export function renderBoard(root, vm, handlers, busy) {
    root.replaceChildren();
    const row = document.createElement("div");
    row.className = "board-row";
    for (const tile of vm.tiles) {
        const cell = document.createElement("span");
        cell.className = "tile";
        if (tile.isRightmost)
            cell.classList.add("rightmost");
        if (tile.justWritten)
            cell.classList.add("just-written");
        cell.textContent = tile.label;
        row.appendChild(cell);
    }
    root.appendChild(row);
    const status = document.createElement("p");
    status.className = "status";
    status.textContent = vm.statusLine;
    root.appendChild(status);
    const meta = document.createElement("p");
    meta.className = "meta";
    meta.textContent =
        vm.counter !== null
            ? `moves made: ${vm.movesMade} | moves remaining: ${vm.counter}`
            : `moves made: ${vm.movesMade}`;
    root.appendChild(meta);
    if (vm.banner) {
        const banner = document.createElement("div");
        banner.className = "banner";
        banner.textContent = vm.banner;
        root.appendChild(banner);
        return;
    }
    if (vm.humanTurn) {
        const controls = document.createElement("div");
        controls.className = "controls";
        vm.buttons.forEach((value, i) => {
            const button = document.createElement("button");
            button.textContent = vm.buttonLabels[i];
            button.dataset.value = String(value);
            button.disabled = busy;
            button.addEventListener("click", () => handlers.onWrite(value));
            controls.appendChild(button);
        });
        if (vm.showPass) {
            const pass = document.createElement("button");
            pass.textContent = "pass";
            pass.dataset.value = "pass";
            pass.disabled = busy;
            pass.addEventListener("click", () => handlers.onPass());
            controls.appendChild(pass);
        }
        root.appendChild(controls);
    }
}
