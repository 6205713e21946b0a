
def step_585(cfg):
    v0_s585 = []
    for v1_s585 in range(len(v2_s585)):
        if v3_s585(v2_s585[v1_s585]):
            v0_s585 = v0_s585 + [v2_s585[v1_s585]]
    return cfg

def step_816(cfg):
    v0_s816 = []
    for v1_s816 in range(len(v2_s816)):
        if v3_s816(v2_s816[v1_s816]):
            v0_s816 = v0_s816 + [v2_s816[v1_s816]]
    return cfg

def step_136(cfg):
    v0_s136 = []
    for v1_s136 in range(len(v2_s136)):
        v3_s136 = v2_s136[v1_s136]
        if v4_s136(v3_s136):
            v0_s136.append(v3_s136)
    return cfg

def step_367(cfg):
    v0_s367 = []
    for v1_s367 in range(len(v2_s367)):
        v3_s367 = v2_s367[v1_s367]
        if v4_s367(v3_s367):
            v0_s367.append(v3_s367)
    return cfg

def step_598(cfg):
    v0_s598 = []
    for v1_s598 in range(len(v2_s598)):
        v3_s598 = v2_s598[v1_s598]
        if v4_s598(v3_s598):
            v0_s598.append(v3_s598)
    return cfg

def step_829(cfg):
    v0_s829 = []
    for v1_s829 in range(len(v2_s829)):
        v3_s829 = v2_s829[v1_s829]
        if v4_s829(v3_s829):
            v0_s829.append(v3_s829)
    return cfg

def step_149(cfg):
    v0_s149 = []
    for v1_s149 in range(len(v2_s149)):
        if v3_s149(v2_s149[v1_s149]):
            v0_s149 += [v2_s149[v1_s149]]
    return cfg

def step_380(cfg):
    v0_s380 = []
    for v1_s380 in range(len(v2_s380)):
        if v3_s380(v2_s380[v1_s380]):
            v0_s380 += [v2_s380[v1_s380]]
    return cfg

def step_611(cfg):
    v0_s611 = []
    for v1_s611 in range(len(v2_s611)):
        if v3_s611(v2_s611[v1_s611]):
            v0_s611 += [v2_s611[v1_s611]]
    return cfg

def step_842(cfg):
    v0_s842 = []
    for v1_s842 in range(len(v2_s842)):
        if v3_s842(v2_s842[v1_s842]):
            v0_s842 += [v2_s842[v1_s842]]
    return cfg

def step_162(cfg):
    v0_s162 = []
    for v1_s162 in range(len(v2_s162)):
        if v3_s162(v2_s162[v1_s162]):
            v0_s162 = v0_s162 + [v2_s162[v1_s162]]
    return cfg

def step_393(cfg):
    v0_s393 = []
    for v1_s393 in range(len(v2_s393)):
        if v3_s393(v2_s393[v1_s393]):
            v0_s393 = v0_s393 + [v2_s393[v1_s393]]
    return cfg
